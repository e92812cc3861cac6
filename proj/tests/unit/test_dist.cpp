#include "helpers.hpp"

namespace bdist::testing {
namespace {

using K = Distribution::Kind;

TEST(Apply, Examples) {
  EXPECT_EQ(apply(Distribution::regular({0}), phi("CHI{(-1,1)}")), Bit::one());
  EXPECT_EQ(apply(Distribution::delta_left({0}), phi("CHI{0}")), Bit::zero());
  EXPECT_EQ(apply(Distribution::parity(), phi("CHI{(0,1)} + CHI{2}")), Bit::zero());
  EXPECT_EQ(apply(Distribution::int_deriv_left(), phi("CHI{(0,1)}")), Bit::one());
  const auto d = Distribution::regular({0});
  EXPECT_EQ(apply(raw::xor_dist(d, d), phi("CHI{0}")), Bit::zero());
  EXPECT_EQ(apply(Distribution(), phi("CHI{(0,5)}")), Bit::zero());
}

TEST(Apply, RegularIsEvaluation) {
  CasePanel panel;
  Generator g(panel, 41);
  for (int i = 0; i < 200; ++i) {
    const auto t0 = g.abscissa();
    const auto p = g.test_function();
    EXPECT_EQ(apply(Distribution::delta(t0), p), p.eval(t0));
  }
}

TEST(Apply, LateralDeltasReadLimits) {
  const auto p = phi("CHI{(0,1)} + CHI{3}");
  EXPECT_EQ(apply(Distribution::delta_left({1}), p), Bit::one());
  EXPECT_EQ(apply(Distribution::delta_right({1}), p), Bit::zero());
  EXPECT_EQ(apply(Distribution::delta_right({0}), p), Bit::one());
  EXPECT_EQ(apply(Distribution::delta_left({3}), p), Bit::zero());
  const auto train = Distribution::delta_left(LocallyFiniteSet::progression(0, R("1/2")));
  EXPECT_EQ(apply(train, p), Bit::zero());  // limits at 1/2 and 1 are both 1
}

TEST(Simplify, Examples) {
  EXPECT_EQ(translate_dist(Distribution::regular({0}), 2), Distribution::regular({2}));
  EXPECT_EQ(scale_dist(fn("CHI{(-1,1)}"), Distribution::regular({0, 5})), Distribution::regular({0}));
  const auto f = dist("DELTAL{0} + PARITY");
  EXPECT_TRUE(xor_dist(f, f).is_null());
  EXPECT_EQ(limit_left(Distribution::regular({0})), Distribution::delta_left({0}));
  EXPECT_EQ(limit_left(Distribution::delta_left({0})), Distribution::delta_left({0}));
  EXPECT_EQ(limit_right(Distribution::parity()), Distribution::parity());
  EXPECT_EQ(limit_left(Distribution::int_deriv_right()), Distribution::int_deriv_right());
  EXPECT_TRUE(deriv_left_dist(Distribution::parity()).is_null());
}

TEST(DistLimits, Examples) {
  for (const char* text : {"CHI{0}", "CHI{(-1,0)}", "CHI{(0,1)}", "CHI{(-1,0)} + CHI{0}"}) {
    const auto p = phi(text);
    EXPECT_EQ(apply(raw::limit_left(Distribution::regular({0})), p), apply(Distribution::delta_left({0}), p)) << text;
  }
  EXPECT_EQ(apply(raw::deriv_left_dist(Distribution::regular({0})), phi("CHI{0}")), Bit::one());
}

TEST(Limits, TraceShowsEpsilons) {
  Trace t;
  apply(raw::limit_left(Distribution::regular({0})), phi("CHI{(-1,0)}"), &t);
  ASSERT_FALSE(t.lines.empty());
  EXPECT_NE(t.lines.front().find("eps="), std::string::npos);
}

TEST(DistClassify, Examples) {
  const auto r = classify_regularity(Distribution::regular({0, 1}));
  EXPECT_EQ(r.kind, RegularityClass::Kind::Regular);
  EXPECT_EQ(r.support, (LocallyFiniteSet{0, 1}));
  EXPECT_EQ(classify_regularity(Distribution::delta_left({0})).kind, RegularityClass::Kind::Singular);
  EXPECT_EQ(classify_regularity(raw::xor_dist(Distribution::regular({0}), Distribution::int_deriv_left())).kind,
            RegularityClass::Kind::Singular);
  const auto v = regularity_criterion(FundamentalBundle(dist("REG{0} + INTDL")), Window(-1, 1));
  EXPECT_EQ(v.kind, RegularityVerdict::Kind::SingularWitness);
  // Limits of the two lateral deltas at one point cancel back to a regular distribution.
  const auto c = classify_regularity(raw::xor_dist(raw::limit_left(Distribution::regular({0})),
                                                   Distribution::delta_left({0})));
  EXPECT_EQ(c.kind, RegularityClass::Kind::Regular);
  EXPECT_TRUE(c.support.empty());
}

TEST(ParityAtoms, IntegralDerivativesEqualParity) {
  CasePanel panel;
  Generator g(panel, 42);
  for (int i = 0; i < 300; ++i) {
    const auto p = g.test_function();
    const Bit par = apply(Distribution::parity(), p);
    EXPECT_EQ(apply(Distribution::int_deriv_left(), p), par);
    EXPECT_EQ(apply(Distribution::int_deriv_right(), p), par);
  }
  EXPECT_EQ(classify_regularity(raw::xor_dist(Distribution::int_deriv_left(), Distribution::int_deriv_right())).kind,
            RegularityClass::Kind::Regular);
}

TEST(Convergence, Examples) {
  const auto a = convergence_check(Distribution::regular({0}), StepFunction(Bit::one()), phi("CHI{(0,1)}"), 10);
  EXPECT_TRUE(a.stabilized);
  EXPECT_EQ(a.limit_plus, Bit::zero());
  const auto b = convergence_check(Distribution::parity(), StepFunction(Bit::one()), phi("CHI{(0,1)} + CHI{1}"), 10);
  EXPECT_TRUE(b.stabilized);
  EXPECT_EQ(b.limit_plus, Bit::zero());
  EXPECT_EQ(b.limit_minus, Bit::zero());
  const auto c = convergence_check(Distribution(), StepFunction(Bit::one()), phi("CHI{(0,1)}"), 10);
  EXPECT_TRUE(c.stabilized);
  EXPECT_EQ(c.rank, 1U);
  EXPECT_EQ(c.limit_plus, Bit::zero());
}

TEST(TranslationLimit, CounterexampleIsRefuted) {
  for (std::size_t n : {3, 5, 10}) {
    const auto r = translation_limit_counterexample(n);
    EXPECT_EQ(r.sequence.size(), n);
    EXPECT_TRUE(r.constant);
    EXPECT_EQ(r.sequence_value, Bit::one());
    EXPECT_EQ(r.target, Bit::zero());
    EXPECT_EQ(r.verdict, "refuted");
  }
  EXPECT_EQ(translation_limit_counterexample(5, TestFunction::zero()).verdict, "not a counterexample input");
  EXPECT_THROW(translation_limit_counterexample(2), std::invalid_argument);
}

TEST(Uniqueness, RegularAgreesOnPointProbesIffSupportsAgree) {
  CasePanel panel;
  Generator g(panel, 43);
  for (int i = 0; i < 100; ++i) {
    const auto s = g.spike_train();
    const auto t = g.coin() ? s.sym_diff(g.finite_set(2)) : g.spike_train();
    const Window w(-4, 4);
    bool probes_agree = true;
    for (const auto& x : s.unite(t).enumerate(w)) {
      probes_agree = probes_agree && apply(Distribution::regular(s), TestFunction::chi_point(x)) ==
                                         apply(Distribution::regular(t), TestFunction::chi_point(x));
    }
    EXPECT_EQ(probes_agree, s.enumerate(w) == t.enumerate(w));
  }
}

class DistProperties : public ::testing::TestWithParam<int> {};

TEST_P(DistProperties, LinearityAdjunctionsIterationAndClassification) {
  CasePanel panel;
  panel.seed = static_cast<std::uint64_t>(GetParam());
  Generator g(panel, 44);
  for (int i = 0; i < 80; ++i) {
    const auto f = g.distribution(3);
    const auto a = g.test_function();
    const auto b = g.test_function();
    const auto tau = g.shift();
    const auto psi = g.step_function();
    const auto text = dsl::to_text(f);
    EXPECT_EQ(apply(f, a ^ b), apply(f, a) ^ apply(f, b)) << text;
    EXPECT_EQ(apply(translate_dist(f, tau), a), apply(f, translate(a, -tau))) << text;
    EXPECT_EQ(apply(scale_dist(psi, f), a), apply(f, scale(psi, a))) << text;
    EXPECT_EQ(apply(limit_left(limit_right(f)), a), apply(raw::limit_left(f), a)) << text;
    EXPECT_EQ(apply(deriv_right_dist(deriv_left_dist(f)), a), apply(raw::deriv_left_dist(f), a)) << text;
    EXPECT_EQ(apply(limit_left(f), a), apply(raw::limit_left(f), a)) << text;
    EXPECT_EQ(apply(deriv_right_dist(f), a), apply(raw::deriv_right_dist(f), a)) << text;
    EXPECT_NO_THROW(apply(raw::limit_right(raw::limit_left(f)), a)) << text;
    const auto cls = classify_regularity(f);
    if (cls.kind == RegularityClass::Kind::Regular) {
      for (int k = 0; k < 20; ++k) {
        const auto p = g.test_function();
        EXPECT_EQ(apply(f, p), apply(Distribution::regular(cls.support), p)) << text;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DistProperties, ::testing::Values(1, 2, 3, 4, 5));

}  // namespace
}  // namespace bdist::testing
