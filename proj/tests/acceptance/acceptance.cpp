// Acceptance run: one PASS/FAIL line per criterion. Case counts and the seed are pinned
// here; every comparison is exact (Bit or structural equality), so there is no tolerance.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bdist/cli.hpp"
#include "bdist/dsl.hpp"
#include "bdist/fundamental.hpp"
#include "bdist/oracle.hpp"

namespace {

using namespace bdist;
using dsl::to_text;

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kRepresentationCases = 1000;
constexpr std::size_t kLinearityCases = 1000;
constexpr std::size_t kOracleCases = 2000;
constexpr std::size_t kDeltaLawCases = 1000;
constexpr std::size_t kUnityOperands = 20;
constexpr std::size_t kUnityPanel = 200;
constexpr std::size_t kWindows = 100;
constexpr std::size_t kIterationCases = 500;
constexpr std::size_t kAdjunctionCases = 500;
constexpr std::size_t kCounterexampleN = 10;
constexpr std::size_t kTensorCases = 500;
constexpr std::size_t kConvolutionTriples = 200;
constexpr std::size_t kDerivativePanel = 100;
constexpr std::size_t kClosurePanel = 200;
constexpr std::size_t kGridProbes = 4;
constexpr std::size_t kAstCases = 500;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Keeps the first failure as the reported witness.
  void require(bool ok, const std::function<std::string()>& why) {
    if (ok) return;
    if (pass) detail = why();
    pass = false;
  }
};

CasePanel panel(std::size_t cases) {
  CasePanel p;
  p.seed = kSeed;
  p.cases = cases;
  return p;
}

Outcome from_suite(const std::string& name, std::size_t cases) {
  Outcome o;
  const SuiteReport r = run_suite(name, panel(cases));
  o.require(r.ok(), [&] { return r.json(); });
  if (o.pass) o.detail = std::to_string(r.passed) + "/" + std::to_string(r.cases) + " checks";
  return o;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome delta_laws() {
  Outcome o;
  Generator g(panel(0), 101);
  for (std::size_t i = 0; i < kDeltaLawCases; ++i) {
    const Rational t0 = g.abscissa();
    const TestFunction phi = g.test_function();
    o.require(apply(Distribution::delta(t0), phi) == phi.eval(t0),
              [&] { return "delta at " + t0.str() + " on " + to_text(phi); });
  }
  const Distribution unit = Distribution::delta(0);
  for (std::size_t i = 0; i < kUnityOperands; ++i) {
    const Distribution h = g.distribution(2);
    const Distribution c = convolve(unit, h);
    for (std::size_t k = 0; k < kUnityPanel; ++k) {
      const TestFunction phi = g.test_function();
      o.require(apply(c, phi) == apply(h, phi), [&] { return "unity fails for " + to_text(h) + " on " + to_text(phi); });
    }
  }
  return o;
}

// The reported witness must be a genuine nonzero value of the named fundamental function.
bool witness_holds(const FundamentalBundle& b, const RegularityVerdict& v) {
  if (v.kind != RegularityVerdict::Kind::SingularWitness) return false;
  if (v.which == "F*") return b.F_star(v.at) == Bit::one();
  if (v.which == "F_*") return b.F_substar(v.at) == Bit::one();
  return v.which == "F0";
}

Outcome singularity_detection() {
  Outcome o;
  Generator g(panel(0), 102);
  const FundamentalBundle left(Distribution::delta_left({0}));
  const FundamentalBundle right(Distribution::delta_right({0}));
  const FundamentalBundle everywhere[] = {FundamentalBundle(Distribution::parity()),
                                          FundamentalBundle(Distribution::int_deriv_left()),
                                          FundamentalBundle(Distribution::int_deriv_right())};
  for (std::size_t i = 0; i < kWindows; ++i) {
    const Rational lo(-BigInt(static_cast<long>(1 + g.below(32))), BigInt(8));
    const Rational hi(BigInt(static_cast<long>(1 + g.below(32))), BigInt(8));
    const Window w(lo, hi);
    const std::string where = " on [" + lo.str() + ", " + hi.str() + "]";
    const auto vl = regularity_criterion(left, w);
    o.require(witness_holds(left, vl) && vl.at == 0 && vl.which == "F*",
              [&] { return "DELTAL{0}" + where + ": " + to_string(vl); });
    const auto vr = regularity_criterion(right, w);
    o.require(witness_holds(right, vr) && vr.at == 0 && vr.which == "F_*",
              [&] { return "DELTAR{0}" + where + ": " + to_string(vr); });
    for (const auto& b : everywhere) {
      const auto v = regularity_criterion(b, w);
      o.require(witness_holds(b, v), [&] { return to_text(b.source()) + where + ": " + to_string(v); });
    }
    const Distribution train = Distribution::regular(g.spike_train());
    const auto v = regularity_criterion(FundamentalBundle(train), w);
    o.require(v.kind == RegularityVerdict::Kind::RegularOnWindow,
              [&] { return to_text(train) + where + ": " + to_string(v); });
  }
  return o;
}

Outcome counterexample() {
  Outcome o;
  const TestFunction phi = TestFunction::chi_interval(0, 1);
  const CounterexampleReport r = translation_limit_counterexample(kCounterexampleN, phi);
  // Derived independently: the oracle evaluates each translate and the left-limit function.
  std::vector<Bit> expected;
  for (std::size_t n = 1; n <= kCounterexampleN; ++n) {
    const Rational tau(BigInt(1), BigInt(static_cast<long>(n + 1)));
    expected.push_back(apply_oracle(Distribution::parity(), translate(phi, tau)));
  }
  const Bit target = apply_oracle(Distribution::parity(), TestFunction(limit_fn_left(phi.fn())));
  o.require(r.sequence == expected, [] { return std::string("sequence differs from the oracle"); });
  o.require(r.target == target, [] { return std::string("target differs from the oracle"); });
  o.require(r.constant, [] { return std::string("sequence is not constant"); });
  o.require(r.sequence_value != r.target, [] { return std::string("sequence limit equals the target"); });
  o.require(r.verdict == "refuted", [&] { return "verdict " + r.verdict; });
  if (o.pass) {
    o.detail = "sequence " + to_string(r.sequence_value) + " for n=1.." + std::to_string(kCounterexampleN) +
               ", target " + to_string(r.target);
  }
  return o;
}

// A random XOR of generators.
Distribution element_of(const std::vector<Distribution>& gens, Generator& g) {
  Distribution d;
  for (const auto& x : gens) {
    if (g.coin()) d = d ^ x;
  }
  return d;
}

Outcome convolution_laws() {
  Outcome o;
  const auto sq = convolve(Distribution::regular({0, 1}), Distribution::regular({0, 1}));
  o.require(sq == Distribution::regular({0, 2}), [&] { return "{0,1}*{0,1} gave " + to_text(sq); });

  Generator g(panel(0), 103);
  for (std::size_t i = 0; i < kConvolutionTriples; ++i) {
    const auto a = g.finite_set();
    const auto b = g.finite_set();
    const auto c = g.finite_set();
    const auto A = Distribution::regular(a);
    const auto B = Distribution::regular(b);
    const auto C = Distribution::regular(c);
    const TestFunction phi = g.test_function();
    const auto what = [&] { return "triple " + to_text(a) + " " + to_text(b) + " " + to_text(c); };
    o.require(apply(convolve(A, B), phi) == pair_parity(a, b, phi), [&] { return what() + " pair parity"; });
    o.require(convolve(A, B) == convolve(B, A), [&] { return what() + " commutativity"; });
    o.require(convolve(convolve(A, B), C) == convolve(A, convolve(B, C)), [&] { return what() + " associativity"; });
  }

  const std::vector<Distribution> lateral{Distribution::delta(0), Distribution::delta_left({0}),
                                          Distribution::delta_right({0})};
  // Point atoms over I = {0, 1}, left atoms over J = {1/2, 2}, right atoms over K = {-1, 3}.
  const std::vector<Distribution> finite{Distribution::delta(0),
                                         Distribution::delta(1),
                                         Distribution::delta_left({Rational(1, 2)}),
                                         Distribution::delta_left({2}),
                                         Distribution::delta_right({-1}),
                                         Distribution::delta_right({3})};
  std::size_t lhs_rule_failures = 0;
  std::size_t rhs_rule_failures = 0;
  std::string first_rhs;
  for (const auto* gens : {&lateral, &finite}) {
    for (std::size_t i = 0; i < kDerivativePanel; ++i) {
      const auto f = element_of(*gens, g);
      const auto h = element_of(*gens, g);
      const TestFunction phi = g.test_function();
      const Bit whole = apply(deriv_left_dist(convolve(f, h)), phi);
      const Bit on_f = apply(convolve(deriv_left_dist(f), h), phi);
      const Bit on_g = apply(convolve(f, deriv_left_dist(h)), phi);
      if (whole != on_f) ++lhs_rule_failures;
      if (whole != on_g) {
        ++rhs_rule_failures;
        if (first_rhs.empty()) {
          first_rhs = "f=" + to_text(f) + " g=" + to_text(h) + " phi=" + to_text(phi) + ": D-(f*g)=" +
                      to_string(whole) + " f*D-g=" + to_string(on_g);
        }
      }
    }
  }
  o.require(lhs_rule_failures == 0,
            [&] { return "D-(f*g) = D-f*g fails on " + std::to_string(lhs_rule_failures) + " cases"; });
  o.require(rhs_rule_failures == 0, [&] {
    return "D-(f*g) = f*D-g fails on " + std::to_string(rhs_rule_failures) + " of " +
           std::to_string(2 * kDerivativePanel) + " cases, first " + first_rhs;
  });

  std::vector<TestFunction> phis;
  for (std::size_t i = 0; i < kClosurePanel; ++i) phis.push_back(g.test_function());
  const std::vector<std::pair<std::string, std::vector<Distribution>>> algebras{
      {"trivial", {Distribution(), Distribution::delta(0)}},
      {"lateral", lateral},
      {"finite", finite}};
  for (const auto& [name, gens] : algebras) {
    try {
      const ClosureReport r = algebra_closure_check({gens, 2}, phis);
      o.require(r.passed(), [&] { return "closure of " + name + " algebra"; });
    } catch (const Error& e) {
      o.require(false, [&] { return "closure of " + name + " algebra: " + e.what(); });
    }
  }
  return o;
}

Outcome grid_refutation() {
  Outcome o;
  std::vector<Rational> unit;
  for (int k = -3; k <= 3; ++k) unit.emplace_back(k);
  const TestFunction point = TestFunction::chi_point(0);
  const Sampler2 sum = [&point](const Rational& t, const Rational& u) { return point.eval(t + u); };
  const auto w = refute_grid_representable(sum, unit, unit, kGridProbes);
  o.require(w.has_value(), [] { return std::string("no witness found"); });
  if (w) {
    o.require(sum(w->first.first, w->first.second) == w->first_value &&
                  sum(w->second.first, w->second.second) == w->second_value && w->first_value != w->second_value,
              [] { return std::string("witness does not check out"); });
    if (o.pass) {
      o.detail = "(" + w->first.first.str() + ", " + w->first.second.str() + ") vs (" + w->second.first.str() + ", " +
                 w->second.second.str() + ")";
    }
  }
  return o;
}

std::string transcript(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return out.str() + "exit: " + std::to_string(code) + "\n";
}

Outcome dsl_roundtrip() {
  Outcome o = from_suite("dsl-roundtrip", kAstCases);
  const std::filesystem::path root(BDIST_GOLDEN_DIR);
  std::size_t values = 0;
  for (const auto& e : std::filesystem::directory_iterator(root / "values")) {
    if (e.path().extension() != ".bd") continue;
    ++values;
    const std::string text = read_file(e.path());
    const std::string stem = e.path().stem().string();
    std::string again;
    try {
      if (stem.starts_with("set_")) {
        again = dsl::serialize(dsl::deserialize_set(text));
      } else if (stem.starts_with("fn2_")) {
        again = dsl::serialize(dsl::deserialize_fn2(text));
      } else if (stem.starts_with("fn_")) {
        again = dsl::serialize(dsl::deserialize_fn(text));
      } else if (stem.starts_with("dist2_")) {
        again = dsl::serialize(dsl::deserialize_dist2(text));
      } else {
        again = dsl::serialize(dsl::deserialize_dist(text));
      }
    } catch (const Error& err) {
      again = std::string("error: ") + err.what();
    }
    o.require(again == text, [&] { return e.path().filename().string() + " does not round-trip"; });
  }
  std::size_t transcripts = 0;
  for (const auto& e : std::filesystem::directory_iterator(root / "cli")) {
    if (e.path().extension() != ".args") continue;
    ++transcripts;
    std::vector<std::string> args;
    std::istringstream in(read_file(e.path()));
    for (std::string line; std::getline(in, line);) args.push_back(line);
    auto expected = e.path();
    expected.replace_extension(".out");
    const std::string first = transcript(args);
    o.require(first == transcript(args), [&] { return e.path().filename().string() + " differs between runs"; });
    o.require(first == read_file(expected), [&] { return e.path().filename().string() + " differs from its golden"; });
  }
  o.require(values > 0 && transcripts > 0, [] { return std::string("golden files missing"); });
  if (o.pass) {
    o.detail += ", " + std::to_string(values) + " value files, " + std::to_string(transcripts) + " CLI transcripts";
  }
  return o;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("raised: ") + e.what()};
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"representation round-trip", [] { return from_suite("representation", kRepresentationCases); }},
      {"linearity", [] { return from_suite("linearity", kLinearityCases); }},
      {"oracle equivalence", [] { return from_suite("oracle", kOracleCases); }},
      {"delta laws", delta_laws},
      {"singularity detection", singularity_detection},
      {"iteration identities", [] { return from_suite("iteration", kIterationCases); }},
      {"adjunctions", [] { return from_suite("adjunction", kAdjunctionCases); }},
      {"translation-limit counterexample", counterexample},
      {"tensor laws", [] { return from_suite("tensor", kTensorCases); }},
      {"convolution laws", convolution_laws},
      {"sum-map grid refutation", grid_refutation},
      {"DSL round-trip", dsl_roundtrip},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = guarded(criteria[i].second);
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
