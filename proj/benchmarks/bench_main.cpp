#include <benchmark/benchmark.h>

#include "bdist/dsl.hpp"
#include "bdist/fundamental.hpp"
#include "bdist/oracle.hpp"

namespace {

using namespace bdist;

struct Cases {
  std::vector<Distribution> dists;
  std::vector<TestFunction> phis;
};

Cases make_cases(int depth) {
  CasePanel panel;
  Generator g(panel, 900);
  Cases c;
  for (int i = 0; i < 256; ++i) {
    c.dists.push_back(g.distribution(depth));
    c.phis.push_back(g.test_function());
  }
  return c;
}

void BM_Apply(benchmark::State& state) {
  const Cases c = make_cases(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(c.dists[i % 256], c.phis[i % 256]));
    ++i;
  }
}
BENCHMARK(BM_Apply)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_Oracle(benchmark::State& state) {
  const Cases c = make_cases(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_oracle(c.dists[i % 256], c.phis[i % 256]));
    ++i;
  }
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(3);

void BM_SpikeConvolution(benchmark::State& state) {
  const auto f = Distribution::regular(LocallyFiniteSet::progression(0, 1, ProgressionRange::NonNegative));
  const auto g = Distribution::regular(LocallyFiniteSet::progression(Rational(1, 2), Rational(3, 2),
                                                                     ProgressionRange::NonNegative));
  const auto fg = convolve(f, g);
  const auto phi = TestFunction::chi_interval(0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply(fg, phi));
}
BENCHMARK(BM_SpikeConvolution)->Arg(8)->Arg(64)->Arg(512);

void BM_FundamentalTable(benchmark::State& state) {
  const auto d = dsl::eval_dist(dsl::parse("DELTAL PROG(0, 1/2) + REG{1/3} + CHI{(0,4)} . PARITY"));
  for (auto _ : state) {
    const FundamentalBundle b(d);
    benchmark::DoNotOptimize(fundamental_table(b, Window(-state.range(0), state.range(0))));
  }
}
BENCHMARK(BM_FundamentalTable)->Arg(2)->Arg(16);

void BM_ParsePrint(benchmark::State& state) {
  CasePanel panel;
  Generator g(panel, 901);
  std::vector<std::string> texts;
  for (int i = 0; i < 64; ++i) texts.push_back(dsl::print_canonical(g.ast(dsl::Sort::Dist, 3)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsl::print_canonical(dsl::parse(texts[i % 64])));
    ++i;
  }
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
