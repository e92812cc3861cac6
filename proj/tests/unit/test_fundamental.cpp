#include <thread>

#include "helpers.hpp"

namespace bdist::testing {
namespace {

TEST(Fundamental, OpenAndPointExamples) {
  const FundamentalBundle b(Distribution::regular({0}));
  EXPECT_EQ(b.F_open(-1, 1), Bit::one());
  EXPECT_EQ(b.F_point(0), Bit::one());
  EXPECT_EQ(b.F_point(1), Bit::zero());
  EXPECT_EQ(b.F_open(1, 1), Bit::zero());
  EXPECT_EQ(FundamentalBundle(Distribution::parity()).F_open(2, 1), Bit::zero());
}

TEST(Fundamental, LateralExamples) {
  EXPECT_EQ(FundamentalBundle(Distribution::regular({0})).F_star(0), Bit::zero());
  EXPECT_EQ(FundamentalBundle(Distribution::delta_left({0})).F_star(0), Bit::one());
  EXPECT_EQ(FundamentalBundle(Distribution::delta_left({0})).F_substar(0), Bit::zero());
  EXPECT_EQ(FundamentalBundle(Distribution::delta_right({0})).F_substar(0), Bit::one());
  const FundamentalBundle zero{Distribution()};
  for (int t = -3; t <= 3; ++t) {
    EXPECT_EQ(zero.F_star(t), Bit::zero());
    EXPECT_EQ(zero.F_substar(t), Bit::zero());
  }
}

TEST(Fundamental, SupportExamples) {
  EXPECT_EQ(support_indicator(FundamentalBundle(Distribution::regular({0})), -1, 1), Bit::one());
  const FundamentalBundle par(Distribution::parity());
  for (int a = -2; a < 2; ++a) EXPECT_EQ(support_indicator(par, a, a + R("1/3")), Bit::one());
  const auto rep = support_window_report(FundamentalBundle(Distribution()), Window(-1, 1));
  EXPECT_TRUE(rep.points.empty());
  EXPECT_TRUE(rep.pairs.empty());
  const auto r0 = support_window_report(FundamentalBundle(Distribution::regular({0, 1})), Window(-1, 2));
  EXPECT_EQ(r0.points, rats({"0", "1"}));
}

TEST(Fundamental, DecomposeExamples) {
  const FundamentalBundle b(Distribution::regular({0, 1}));
  EXPECT_EQ(decompose(b, Window(-1, 2)), rats({"-1", "0", "1", "2"}));
  EXPECT_EQ(b.F_open(0, 1), Bit::zero());
  EXPECT_EQ(decompose(FundamentalBundle(Distribution()), Window(-1, 2)), rats({"-1", "2"}));
  EXPECT_EQ(error_of([] { decompose(FundamentalBundle(Distribution::parity()), Window(-1, 1)); }),
            ErrorCode::NoVanishingFamily);
  EXPECT_NO_THROW(decompose(FundamentalBundle(Distribution::delta_left({0})), Window(-1, 1)));
}

TEST(Fundamental, ReconstructionExamples) {
  CasePanel panel;
  Generator g(panel, 51);
  for (const auto& d : {Distribution::regular({0}), Distribution::delta_left({0})}) {
    const FundamentalBundle b(d);
    const auto f = from_fundamental(b);
    for (int i = 0; i < 100; ++i) {
      const auto p = g.test_function();
      EXPECT_EQ(f.apply(p), apply(d, p));
    }
  }
  const auto null = from_fundamental([](const Rational&, const Rational&) { return Bit::zero(); },
                                     [](const Rational&) { return Bit::zero(); });
  for (int i = 0; i < 20; ++i) EXPECT_EQ(null.apply(g.test_function()), Bit::zero());
}

TEST(Fundamental, CriterionExamples) {
  const auto reg = regularity_criterion(FundamentalBundle(Distribution::regular({0, 1})), Window(-2, 2));
  EXPECT_EQ(reg.kind, RegularityVerdict::Kind::RegularOnWindow);
  EXPECT_EQ(to_string(reg), "REGULAR on [-2, 2]");
  const auto sing = regularity_criterion(FundamentalBundle(Distribution::delta_left({0})), Window(-1, 1));
  EXPECT_EQ(sing.kind, RegularityVerdict::Kind::SingularWitness);
  EXPECT_EQ(sing.at, 0);
  EXPECT_EQ(sing.which, "F*");
  EXPECT_EQ(to_string(sing), "SINGULAR at t=0 (F*)");
  const auto intd = regularity_criterion(FundamentalBundle(Distribution::int_deriv_left()), Window(-1, 1));
  EXPECT_EQ(intd.kind, RegularityVerdict::Kind::SingularWitness);
  EXPECT_EQ(intd.at, -1);
  EXPECT_EQ(intd.which, "F*");
}

TEST(Fundamental, TableListsCriticalRows) {
  const auto tab = fundamental_table(FundamentalBundle(Distribution::delta_right({0})), Window(-1, 1));
  ASSERT_EQ(tab.rows.size(), 3U);
  EXPECT_EQ(tab.rows[1].t, 0);
  EXPECT_EQ(tab.rows[1].f_substar, Bit::one());
  ASSERT_EQ(tab.pairs.size(), 2U);
  EXPECT_EQ(tab.pairs[1].f, Bit::one());  // (0, 1) picks up phi(0+0)
}

TEST(Fundamental, ConcurrentUseAgrees) {
  const FundamentalBundle b(dist("DELTAL PROG(0, 1/2) + REG{1/3}"));
  std::vector<Bit> serial;
  for (int i = -8; i <= 8; ++i) serial.push_back(b.F_star(Rational(BigInt(i), BigInt(4))));
  std::vector<std::vector<Bit>> results(4);
  std::vector<std::thread> pool;
  for (auto& r : results) {
    pool.emplace_back([&b, &r] {
      for (int i = -8; i <= 8; ++i) r.push_back(b.F_star(Rational(BigInt(i), BigInt(4))));
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}

class FundamentalProperties : public ::testing::TestWithParam<int> {};

TEST_P(FundamentalProperties, AdditivityReconstructionAndRegularity) {
  CasePanel panel;
  panel.seed = static_cast<std::uint64_t>(GetParam());
  Generator g(panel, 52);
  for (int i = 0; i < 60; ++i) {
    const auto f = g.distribution(2);
    const FundamentalBundle b(f);
    const auto text = dsl::to_text(f);
    const auto xs = g.distinct_abscissas(3);
    if (xs.size() == 3) {
      EXPECT_EQ(b.F_open(xs[0], xs[2]), b.F_open(xs[0], xs[1]) ^ b.F_point(xs[1]) ^ b.F_open(xs[1], xs[2])) << text;
    }
    const auto p = g.test_function();
    EXPECT_EQ(from_fundamental(b).apply(p), apply(f, p)) << text;
    const auto cls = classify_regularity(f);
    if (cls.kind == RegularityClass::Kind::Regular) {
      for (int k = 0; k < 5; ++k) {
        const auto t = g.abscissa();
        EXPECT_EQ(b.F_star(t), Bit::zero()) << text;
        EXPECT_EQ(b.F_substar(t), Bit::zero()) << text;
        EXPECT_EQ(b.F_point(t), Bit(cls.support.contains(t))) << text;
      }
      EXPECT_EQ(regularity_criterion(b, Window(-3, 3)).kind, RegularityVerdict::Kind::RegularOnWindow) << text;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FundamentalProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace bdist::testing
