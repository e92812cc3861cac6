#include <algorithm>

#include "helpers.hpp"

namespace bdist::testing {
namespace {

using PR = ProgressionRange;

TEST(Enumerate, Examples) {
  EXPECT_EQ(LocallyFiniteSet({0, 1}).enumerate(Window(-1, R("1/2"))), rats({"0"}));
  EXPECT_EQ(LocallyFiniteSet::progression(0, 1).enumerate(Window(R("-3/2"), R("3/2"))), rats({"-1", "0", "1"}));
  EXPECT_TRUE(LocallyFiniteSet().enumerate(Window(-5, 5)).empty());
}

TEST(SymDiff, Examples) {
  EXPECT_EQ(sym_diff(LocallyFiniteSet{0, 1}, LocallyFiniteSet{1, 2}), (LocallyFiniteSet{0, 2}));
  EXPECT_TRUE(sym_diff(LocallyFiniteSet{0}, LocallyFiniteSet{0}).empty());
  const auto s = sym_diff(LocallyFiniteSet::progression(0, 1), LocallyFiniteSet{0});
  EXPECT_EQ(s.enumerate(Window(R("-1/2"), R("3/2"))), rats({"1"}));
  EXPECT_FALSE(s.contains(0));
  EXPECT_TRUE(s.contains(-7));
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate_set(LocallyFiniteSet{0, 1}, 2), (LocallyFiniteSet{2, 3}));
  EXPECT_EQ(translate_set(LocallyFiniteSet::progression(0, 1), R("1/2")), LocallyFiniteSet::progression(R("1/2"), 1));
  EXPECT_EQ(reflect_set(LocallyFiniteSet{-1, 3}), (LocallyFiniteSet{-3, 1}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(LocallyFiniteSet{0, 1}), SetClass::Finite);
  const auto up = LocallyFiniteSet{0}.unite(LocallyFiniteSet::progression(0, 1, PR::NonNegative));
  EXPECT_EQ(classify(up), SetClass::InferiorlyFinite);
  for (int alpha : {-10, 0, 10}) EXPECT_LE(up.enumerate(Window(-1000, alpha)).size(), 11U);
  EXPECT_EQ(classify(LocallyFiniteSet::progression(0, 1, PR::NonPositive)), SetClass::SuperiorlyFinite);
  EXPECT_EQ(classify(LocallyFiniteSet::progression(0, 1)), SetClass::LocallyFiniteOnly);
}

TEST(Progression, ZeroPeriodRejected) {
  EXPECT_EQ(error_of([] { LocallyFiniteSet::progression(0, 0); }), ErrorCode::ZeroPeriod);
  EXPECT_EQ(error_of([] { LocallyFiniteSet::progression(0, -1); }), ErrorCode::ZeroPeriod);
}

TEST(Progression, RaysStartAtOffset) {
  const auto up = LocallyFiniteSet::progression(R("1/2"), 2, PR::NonNegative);
  EXPECT_EQ(up.min(), R("1/2"));
  EXPECT_EQ(up.enumerate(Window(-10, 5)), rats({"1/2", "5/2", "9/2"}));
  const auto down = LocallyFiniteSet::progression(R("1/2"), 2, PR::NonPositive);
  EXPECT_EQ(down.max(), R("1/2"));
  EXPECT_EQ(down.enumerate(Window(-4, 10)), rats({"-7/2", "-3/2", "1/2"}));
}

TEST(Progression, MixedPeriodsStayExact) {
  const auto a = LocallyFiniteSet::progression(0, R("1/2"));
  const auto b = LocallyFiniteSet::progression(0, R("1/3"));
  const auto s = a.sym_diff(b);
  EXPECT_EQ(s.enumerate(Window(0, 1)), rats({"1/3", "1/2", "2/3"}));
  EXPECT_EQ(s.sym_diff(b), a);
}

class SetProperties : public ::testing::TestWithParam<int> {};

TEST_P(SetProperties, SymDiffCountsAndTranslation) {
  CasePanel panel;
  panel.seed = static_cast<std::uint64_t>(GetParam());
  Generator g(panel, 11);
  for (int i = 0; i < 60; ++i) {
    const auto a = g.spike_train();
    const auto b = g.spike_train();
    const auto ends = g.distinct_abscissas(2);
    if (ends.size() < 2) continue;
    const Window w(ends[0], ends[1]);
    const auto ea = a.enumerate(w);
    const auto eb = b.enumerate(w);
    std::vector<Rational> both;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
    const auto es = a.sym_diff(b).enumerate(w);
    EXPECT_EQ(es.size(), ea.size() + eb.size() - 2 * both.size());
    std::vector<Rational> expect;
    std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(expect));
    EXPECT_EQ(es, expect);
    EXPECT_TRUE(std::is_sorted(es.begin(), es.end()));
    EXPECT_EQ(std::adjacent_find(es.begin(), es.end()), es.end());
    for (const auto& x : es) EXPECT_TRUE(a.sym_diff(b).contains(x));

    const Rational tau = g.shift();
    auto shifted = a.enumerate(w.shifted(-tau));
    for (auto& x : shifted) x += tau;
    EXPECT_EQ(translate_set(a, tau).enumerate(w), shifted);

    if (a.is_finite() && b.is_finite()) {
      EXPECT_EQ(classify(a.sym_diff(b)), SetClass::Finite);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SetProperties, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace bdist::testing
