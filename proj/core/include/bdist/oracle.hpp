#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bdist/dist.hpp"
#include "bdist/dsl.hpp"
#include "bdist/tensor_conv.hpp"

namespace bdist {

/// Parameters of a randomized case run. Generation is a pure function of the seed.
struct CasePanel {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  long max_denominator = 8;  // abscissas p/q with 1 <= q <= max_denominator
  long max_magnitude = 8;    // and |p/q| <= max_magnitude
  std::size_t max_breakpoints = 6;
};

/// Deterministic instance generator over the panel's abscissa universe.
class Generator {
 public:
  explicit Generator(const CasePanel& panel, std::uint64_t stream = 0);

  std::mt19937_64& rng() { return rng_; }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Rational abscissa();
  Rational shift();  // small translation amount, may be 0
  std::vector<Rational> distinct_abscissas(std::size_t n);

  StepFunction step_function();
  TestFunction test_function();
  TestFunction2 test_function2();
  LocallyFiniteSet finite_set(std::size_t max_size = 4);
  LocallyFiniteSet spike_train();
  /// Random expression built with the raw (non-simplifying) constructors; depth <= 4.
  Distribution distribution(int depth);
  /// Finite XOR of point and lateral atoms.
  Distribution atom_combination(std::size_t max_atoms = 3);
  /// Random syntax tree of the given sort.
  dsl::Ast ast(dsl::Sort sort, int depth);

 private:
  CasePanel panel_;
  std::mt19937_64 rng_;
};

inline TestFunction gen_test_function(Generator& g) { return g.test_function(); }
inline LocallyFiniteSet gen_spike_train(Generator& g) { return g.spike_train(); }
inline Distribution gen_distribution(Generator& g, int depth) { return g.distribution(depth); }
inline TestFunction2 gen_test_function2(Generator& g) { return g.test_function2(); }

/// Independent evaluator of <f, phi>: splits phi into singleton and open-interval pieces,
/// evaluates f on each indicator with its own recursion, and takes lateral limits with
/// epsilons gap/3 and gap/5.
Bit apply_oracle(const Distribution& f, const TestFunction& phi);

/// Parity of pair sums xi + eta (xi in f, eta in g) landing on 1-points of phi; f, g finite.
Bit pair_parity(const LocallyFiniteSet& f, const LocallyFiniteSet& g, const TestFunction& phi);

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string counterexample;  // first failing instance in DSL text
  std::string note;

  bool ok() const { return failed == 0; }
  /// One JSON record, no trailing newline.
  std::string json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one registered identity family; throws Error(UnknownSuite) for other names.
SuiteReport run_suite(const std::string& name, const CasePanel& panel);

}  // namespace bdist
