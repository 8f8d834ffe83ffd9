#include <benchmark/benchmark.h>

#include "moca/boolfun.hpp"
#include "moca/nonlinear_moca.hpp"
#include "moca/prng.hpp"
#include "moca/sss.hpp"

namespace {

using namespace moca;
using ca::LocalRule;
using gf::FieldSpec;

void BM_PolyGcd(benchmark::State& state) {
  const FieldSpec f2(2);
  const gf::Polynomial a(f2, {1, 0, 1, 1, 0, 1, 1, 0, 1});
  const gf::Polynomial b(f2, {1, 1, 0, 0, 1, 0, 0, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf::poly_gcd(a, b));
  }
}
BENCHMARK(BM_PolyGcd);

void BM_CayleyTable(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  std::vector<gf::Elem> coeffs(d, 0);
  coeffs.front() = coeffs.back() = 1;
  const LocalRule rule = LocalRule::linear(FieldSpec(2), coeffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(designs::cayley_table(rule));
  }
}
BENCHMARK(BM_CayleyTable)->Arg(4)->Arg(5)->Arg(6);

void BM_OrthogonalityCheck(benchmark::State& state) {
  const LocalRule f = LocalRule::linear(FieldSpec(2), {1, 0, 0, 0, 1});
  const LocalRule g = LocalRule::linear(FieldSpec(2), {1, 1, 0, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonlinear::are_orthogonal_rules(f, g));
  }
}
BENCHMARK(BM_OrthogonalityCheck);

void BM_SearchOrthogonalD5(benchmark::State& state) {
  nonlinear::SearchOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonlinear::search_orthogonal(5, options));
  }
}
BENCHMARK(BM_SearchOrthogonalD5)->Arg(1)->Arg(2);

void BM_WalshTransform(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = static_cast<std::uint8_t>((i * 2654435761u >> 7) & 1);
  }
  const boolfun::BooleanFunction f = boolfun::make_function(n, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(boolfun::walsh_transform(f));
  }
}
BENCHMARK(BM_WalshTransform)->Arg(8)->Arg(12)->Arg(16);

void BM_IteratePreimage(benchmark::State& state) {
  const LocalRule rule = LocalRule::from_wolfram(3, 150);
  const ca::Cells y{1, 0, 0, 1, 1, 0, 1, 0};
  std::vector<ca::SeedAt> seeds(16, ca::SeedAt{{0, 1}, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ca::iterate_preimage(rule, y, seeds));
  }
}
BENCHMARK(BM_IteratePreimage);

void BM_CycleStructure(benchmark::State& state) {
  // two distinct irreducible quartics, hence a coprime pair
  const prng::OcaPair pair(LocalRule::linear(FieldSpec(2), {1, 1, 0, 0, 1}),
                           LocalRule::linear(FieldSpec(2), {1, 0, 0, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prng::cycle_structure(pair));
  }
}
BENCHMARK(BM_CycleStructure);

void BM_SylvesterReconstruct(benchmark::State& state) {
  const std::vector<LocalRule> family{LocalRule::linear(FieldSpec(2), {1, 0, 1}),
                                      LocalRule::linear(FieldSpec(2), {1, 1, 1})};
  const auto shares = sss::deal(2, 3, family);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sss::reconstruct_linear(shares[0], shares[1], family));
  }
}
BENCHMARK(BM_SylvesterReconstruct);

}  // namespace

BENCHMARK_MAIN();
