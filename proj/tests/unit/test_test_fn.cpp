#include "helpers.hpp"

namespace bdist::testing {
namespace {

using Cell = TestFunction2::AxisCell;

TEST(AsTestFunction, Examples) {
  EXPECT_NO_THROW(as_test_function(StepFunction::chi_interval(0, 1)));
  EXPECT_EQ(error_of([] { as_test_function(StepFunction(Bit::one())); }), ErrorCode::UnboundedSupport);
  const auto two = as_test_function(fn("CHI{0} + CHI{(2,3)}"));
  EXPECT_EQ(component_count(two), (ComponentCount{1, 1}));
}

TEST(Integral, Examples) {
  EXPECT_EQ(integral(phi("CHI{0} + CHI{1}")), Bit::zero());
  EXPECT_EQ(integral(phi("CHI{0} + CHI{1} + CHI{2}")), Bit::one());
  EXPECT_EQ(error_of([] { integral(phi("CHI{(0,1)}")); }), ErrorCode::NotIntegrable);
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(phi("CHI{(0,1)}")), (ComponentCount{1, 0}));
  EXPECT_EQ(component_count(phi("CHI{(0,1)} + CHI{1}")), (ComponentCount{1, 1}));
  EXPECT_EQ(component_count(phi("CHI{(0,1)} + CHI{1} + CHI{(1,2)}")), (ComponentCount{1, 0}));
}

TEST(Slice, Examples) {
  const auto sq = fn2("CHI2{(0,1)x(0,1)}");
  EXPECT_EQ(slice_t(sq, R("1/2")), TestFunction::chi_interval(0, 1));
  EXPECT_EQ(slice_t(sq, 2), TestFunction::zero());
  const auto pp = TestFunction2::chi(Cell::point(0), Cell::point(0));
  EXPECT_EQ(slice_t(pp, 0), TestFunction::chi_point(0));
}

TEST(TwoVariable, TranslateXorTranspose) {
  const auto sq = fn2("CHI2{(0,1)x(0,2)} + CHI2{{3}x{1}}");
  EXPECT_EQ(translate2(sq, 1, 0).t_breakpoints(), rats({"1", "2", "4"}));
  EXPECT_TRUE(xor2(sq, sq).is_zero());
  EXPECT_EQ(transpose(transpose(sq)), sq);
  EXPECT_EQ(error_of([] { TestFunction2(rats({"0"}), {}, {Bit::one(), Bit::zero(), Bit::zero()}); }),
            ErrorCode::UnboundedSupport);
}

TEST(GridRefutation, Examples) {
  const auto grid = rats({"-1", "0", "1"});
  const Sampler2 diag = [](const Rational& t, const Rational& u) { return Bit(t + u == 0); };
  const auto w = refute_grid_representable(diag, grid, grid, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->first_value, w->second_value);
  EXPECT_EQ(diag(w->first.first, w->first.second), w->first_value);
  const auto sq = fn2("CHI2{(-1,0)x(0,1)} + CHI2{{0}x{0}}");
  const Sampler2 own = [&](const Rational& t, const Rational& u) { return sq.eval(t, u); };
  EXPECT_FALSE(refute_grid_representable(own, sq.t_breakpoints(), sq.u_breakpoints(), 4).has_value());
  const Sampler2 zero = [](const Rational&, const Rational&) { return Bit::zero(); };
  EXPECT_FALSE(refute_grid_representable(zero, grid, grid, 4).has_value());
}

class TestFnProperties : public ::testing::TestWithParam<int> {};

TEST_P(TestFnProperties, IntegralAdditiveAndCountRefinementInvariant) {
  CasePanel panel;
  panel.seed = static_cast<std::uint64_t>(GetParam());
  Generator g(panel, 31);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.test_function();
    EXPECT_EQ(a.fn().left_tail(), Bit::zero());
    EXPECT_EQ(a.fn().right_tail(), Bit::zero());
    // Spike-only functions are integrable.
    auto spikes = [&] {
      TestFunction s;
      for (const auto& x : g.distinct_abscissas(g.below(5))) s = s ^ TestFunction::chi_point(x);
      return s;
    };
    const auto s1 = spikes();
    const auto s2 = spikes();
    EXPECT_EQ(integral(s1 ^ s2), integral(s1) ^ integral(s2));
    // Refine the maximal decomposition by splitting one open piece at an interior point;
    // the refined pieces still rebuild a and their count has the same parity.
    const auto count = component_count(a);
    TestFunction rebuilt;
    std::size_t pieces = 0;
    bool split = false;
    for (const auto& c : support_descriptor(a.fn()).components) {
      if (c.kind == SupportComponent::Kind::Point) {
        rebuilt = rebuilt ^ TestFunction::chi_point(*c.lo);
        ++pieces;
      } else if (!split) {
        const Rational cut = *c.lo + (*c.hi - *c.lo) * Rational(BigInt(1 + static_cast<long>(g.below(7))), BigInt(8));
        rebuilt = rebuilt ^ TestFunction::chi_interval(*c.lo, cut) ^ TestFunction::chi_point(cut) ^
                  TestFunction::chi_interval(cut, *c.hi);
        pieces += 3;
        split = true;
      } else {
        rebuilt = rebuilt ^ TestFunction::chi_interval(*c.lo, *c.hi);
        ++pieces;
      }
    }
    EXPECT_EQ(rebuilt, a);
    EXPECT_EQ(parity(std::uint64_t(pieces)), parity(std::uint64_t(count.open + count.points)));
    EXPECT_EQ(apply(Distribution::parity(), a), parity(std::uint64_t(pieces)));
  }
}

TEST_P(TestFnProperties, SlicesAndTranspose) {
  CasePanel panel;
  panel.seed = static_cast<std::uint64_t>(GetParam());
  Generator g(panel, 32);
  for (int i = 0; i < 60; ++i) {
    const auto f = g.test_function2();
    const auto& tb = f.t_breakpoints();
    for (std::size_t k = 0; k + 1 < tb.size(); ++k) {
      const Rational q = (tb[k + 1] - tb[k]) / 4;
      EXPECT_EQ(slice_t(f, tb[k] + q), slice_t(f, tb[k] + 3 * q));
    }
    EXPECT_EQ(transpose(transpose(f)), f);
    for (const auto& u : g.distinct_abscissas(3)) EXPECT_EQ(slice_t(transpose(f), u), slice_u(f, u));
    const auto h = g.test_function2();
    for (int s = 0; s < 5; ++s) {
      const Rational t = g.abscissa();
      const Rational u = g.abscissa();
      EXPECT_EQ((f ^ h).eval(t, u), f.eval(t, u) ^ h.eval(t, u));
      EXPECT_EQ((f * h).eval(t, u), f.eval(t, u) * h.eval(t, u));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TestFnProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace bdist::testing
