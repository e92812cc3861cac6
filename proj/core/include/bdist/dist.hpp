#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdist/point_sets.hpp"
#include "bdist/test_fn.hpp"

namespace bdist {

/// A B2-valued linear functional on test functions, held as an immutable expression tree.
///
/// The default-constructed value is the null distribution Regular({}).
class Distribution {
 public:
  enum class Kind {
    Regular,
    DeltaLeft,
    DeltaRight,
    Parity,
    IntDerivLeft,
    IntDerivRight,
    Xor,
    Scale,
    Translate,
    LimitLeft,
    LimitRight,
    DerivLeft,
    DerivRight,
    // Lazy pair-parity spike train of two infinite supports.
    SpikeConvolution,
  };

  struct Node {
    Kind kind = Kind::Regular;
    LocallyFiniteSet set;   // Regular, DeltaLeft, DeltaRight; first factor of SpikeConvolution
    LocallyFiniteSet set2;  // second factor of SpikeConvolution
    Rational tau;           // Translate
    StepFunction psi;       // Scale
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  Distribution();

  static Distribution regular(LocallyFiniteSet support);
  /// delta at t, i.e. Regular({t}).
  static Distribution delta(const Rational& t) { return regular(LocallyFiniteSet{t}); }
  static Distribution delta_left(LocallyFiniteSet points);
  static Distribution delta_right(LocallyFiniteSet points);
  static Distribution parity();
  static Distribution int_deriv_left();
  static Distribution int_deriv_right();
  static Distribution spike_convolution(LocallyFiniteSet f, LocallyFiniteSet g);
  /// Wraps a node without any simplification.
  static Distribution from_node(Node node);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  const LocallyFiniteSet& support() const { return node_->set; }
  const LocallyFiniteSet& second_support() const { return node_->set2; }
  const Rational& shift() const { return node_->tau; }
  const StepFunction& multiplier() const { return node_->psi; }
  Distribution child() const { return Distribution(node_->a); }
  Distribution lhs() const { return Distribution(node_->a); }
  Distribution rhs() const { return Distribution(node_->b); }

  bool is_null() const { return kind() == Kind::Regular && support().empty(); }

  /// Structural equality (sets compared as sets).
  friend bool operator==(const Distribution& x, const Distribution& y);

 private:
  explicit Distribution(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view kind_name(Distribution::Kind k);

/// Optional evaluation log: one line per node visited, limits record the chosen epsilon.
struct Trace {
  std::vector<std::string> lines;
  int depth = 0;
};

/// <f, phi>.
/// Throws ErrorCode::LimitNotStabilized if a lateral limit disagrees between its two confirmation epsilons.
Bit apply(const Distribution& f, const TestFunction& phi, Trace* trace = nullptr);

/// Abscissas inside w where f's behaviour can change (support points of atoms, multiplier
/// breakpoints, spike-train sums), sorted and unique.
std::vector<Rational> critical_points(const Distribution& f, const Window& w);

// Simplifying constructors.
Distribution xor_dist(const Distribution& f, const Distribution& g);
Distribution translate_dist(const Distribution& f, const Rational& tau);
Distribution scale_dist(const StepFunction& psi, const Distribution& f);
Distribution limit_left(const Distribution& f);
Distribution limit_right(const Distribution& f);
Distribution deriv_left_dist(const Distribution& f);
Distribution deriv_right_dist(const Distribution& f);

inline Distribution operator^(const Distribution& f, const Distribution& g) { return xor_dist(f, g); }

/// Constructors that only wrap, so identities can be checked against the evaluator
/// rather than against the simplifier.
namespace raw {
Distribution xor_dist(const Distribution& f, const Distribution& g);
Distribution translate_dist(const Distribution& f, const Rational& tau);
Distribution scale_dist(const StepFunction& psi, const Distribution& f);
Distribution limit_left(const Distribution& f);
Distribution limit_right(const Distribution& f);
Distribution deriv_left_dist(const Distribution& f);
Distribution deriv_right_dist(const Distribution& f);
}  // namespace raw

/// S intersected with {psi = 1}.
LocallyFiniteSet restrict_set(const LocallyFiniteSet& s, const StepFunction& psi);

/// Normal form as a XOR of atoms: point evaluations on `point`, left limits on `left`,
/// right limits on `right`, and the parity functional when `parity` is 1 (the two
/// integral-of-derivative functionals coincide with it).
struct AtomForm {
  LocallyFiniteSet point;
  LocallyFiniteSet left;
  LocallyFiniteSet right;
  Bit parity;
};

/// nullopt when the expression leaves the atom algebra (a parity-type atom under a
/// non-constant multiplier, or a lazy spike convolution).
std::optional<AtomForm> atom_form(const Distribution& f);
Distribution from_atoms(const AtomForm& form);

struct RegularityClass {
  enum class Kind { Regular, Singular, Unknown };
  Kind kind = Kind::Unknown;
  LocallyFiniteSet support;  // spike support when Regular
};

RegularityClass classify_regularity(const Distribution& f);

struct ConvergenceReport {
  bool stabilized = false;
  Bit limit_plus;   // limit of <f, psi . phi_{tau_n}>
  Bit limit_minus;  // limit of <f, psi . phi_{-tau_n}>
  std::size_t rank = 0;  // first n from which both sequences are constant
  std::vector<Bit> plus;
  std::vector<Bit> minus;
};

/// Evaluates both translated sequences for tau_n = 1/(n+1), n = 1..n_max.
ConvergenceReport convergence_check(const Distribution& f, const StepFunction& psi, const TestFunction& phi,
                                    std::size_t n_max);

struct CounterexampleReport {
  std::vector<Bit> sequence;  // <Parity, phi_{tau_n}>, n = 1..N
  bool constant = false;
  Bit sequence_value;
  Bit target;  // <Parity, phi(t - 0)>
  std::string verdict;  // "refuted", "holds" or "not a counterexample input"
};

/// The translated-sequence counterexample to exchanging limit and pairing:
/// <Parity, phi_{tau_n}> is constant while <Parity, phi(t - 0)> differs.
/// Requires n >= 3.
CounterexampleReport translation_limit_counterexample(std::size_t n,
                                                      const TestFunction& phi = TestFunction::chi_interval(0, 1));

}  // namespace bdist
