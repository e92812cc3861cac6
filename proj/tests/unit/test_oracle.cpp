#include <json.hpp>

#include "helpers.hpp"

namespace bdist::testing {
namespace {

TEST(Oracle, Examples) {
  EXPECT_EQ(apply_oracle(Distribution::regular({0}), phi("CHI{(-1,1)}")), Bit::one());
  EXPECT_EQ(apply_oracle(Distribution::parity(), phi("CHI{3}")), Bit::one());
  EXPECT_EQ(apply_oracle(Distribution(), phi("CHI{(0,1)}")), Bit::zero());
  EXPECT_EQ(apply_oracle(Distribution::delta_left({0}), phi("CHI{(-1,0)}")), Bit::one());
  EXPECT_EQ(apply_oracle(Distribution::delta_right({0}), phi("CHI{(-1,0)}")), Bit::zero());
}

TEST(Oracle, PairParity) {
  EXPECT_EQ(pair_parity(set("{0, 1}"), set("{0, 1}"), phi("CHI{1}")), Bit::zero());
  EXPECT_EQ(pair_parity(set("{0, 1}"), set("{0, 1}"), phi("CHI{2}")), Bit::one());
  EXPECT_THROW(pair_parity(set("PROG(0, 1)"), set("{0}"), phi("CHI{0}")), std::invalid_argument);
}

TEST(Generator, DeterministicPerSeedAndStream) {
  CasePanel panel;
  Generator a(panel, 3);
  Generator b(panel, 3);
  Generator c(panel, 4);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const auto x = dsl::to_text(a.distribution(3));
    EXPECT_EQ(x, dsl::to_text(b.distribution(3)));
    differs = differs || x != dsl::to_text(c.distribution(3));
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, ValuesStayInTheUniverse) {
  CasePanel panel;
  Generator g(panel, 5);
  for (int i = 0; i < 300; ++i) {
    const auto x = g.abscissa();
    EXPECT_LE(x.abs(), Rational(panel.max_magnitude));
    EXPECT_LE(x.denominator(), BigInt(panel.max_denominator));
    const auto p = g.test_function();
    EXPECT_TRUE(p.is_zero() || p.hull().has_value());
    EXPECT_EQ(g.finite_set().classify(), SetClass::Finite);
    EXPECT_TRUE(atom_form(g.atom_combination()).has_value());
  }
}

TEST(Generator, DistributionsNeverFailToStabilize) {
  CasePanel panel;
  Generator g(panel, 6);
  for (int i = 0; i < 400; ++i) {
    const auto f = g.distribution(3);
    const auto p = g.test_function();
    EXPECT_NO_THROW(apply(f, p)) << dsl::to_text(f);
  }
}

TEST(Suites, EachPasses) {
  CasePanel panel;
  panel.cases = 60;
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, panel);
    EXPECT_TRUE(r.ok()) << r.json();
    EXPECT_EQ(r.passed + r.failed, r.cases) << name;
  }
}

TEST(Suites, UnknownName) {
  EXPECT_EQ(error_of([] { run_suite("nope", CasePanel{}); }), ErrorCode::UnknownSuite);
}

TEST(Suites, JsonRecord) {
  SuiteReport r;
  r.name = "x";
  r.cases = 3;
  r.passed = 2;
  r.failed = 1;
  r.counterexample = "REG{0}";
  const auto j = nlohmann::json::parse(r.json());
  EXPECT_EQ(j.at("suite"), "x");
  EXPECT_EQ(j.at("cases"), 3);
  EXPECT_EQ(j.at("ok"), false);
  EXPECT_EQ(j.at("counterexample"), "REG{0}");
  EXPECT_EQ(r.json().find('\n'), std::string::npos);
}

TEST(Suites, SameSeedSameReport) {
  CasePanel panel;
  panel.cases = 40;
  panel.seed = 9;
  EXPECT_EQ(run_suite("oracle", panel).json(), run_suite("oracle", panel).json());
}

}  // namespace
}  // namespace bdist::testing
