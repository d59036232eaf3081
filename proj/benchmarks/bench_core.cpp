#include <benchmark/benchmark.h>

#include <random>

#include "padic/json_io.hpp"
#include "padic/oracle.hpp"
#include "padic/witness.hpp"

using namespace padic;

namespace {

FieldElement random_element(std::mt19937_64& rng, const PrimeContext& ctx) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  std::uniform_int_distribution<unsigned> idx(0, ctx.D - 1);
  while (true) {
    std::vector<std::pair<unsigned, Rational>> terms;
    for (int t = 0; t < 3; ++t) terms.emplace_back(idx(rng), make_rational(num(rng), den(rng)));
    auto x = FieldElement::from_terms(ctx, terms);
    if (!x.is_zero()) return x;
  }
}

SubspaceBasis worked_example() {
  const PrimeContext c2{2, 1};
  return SubspaceBasis::build(
      {SeriesVector({TruncatedSeries::constant(c2, 1, FieldElement::one(c2))}),
       SeriesVector({TruncatedSeries::variable(c2, 1, 0)})});
}

void BM_FieldMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  PrimeContext ctx(3, static_cast<unsigned>(state.range(0)));
  auto x = random_element(rng, ctx);
  auto y = random_element(rng, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(12);

void BM_FieldInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  PrimeContext ctx(3, static_cast<unsigned>(state.range(0)));
  auto x = random_element(rng, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(2)->Arg(6)->Arg(12);

void BM_RowReduce(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-30, 30);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) m.at(i, j) = make_rational(entry(rng), 7);
  for (auto _ : state) {
    RationalMatrix copy = m;
    benchmark::DoNotOptimize(row_reduce(copy));
  }
}
BENCHMARK(BM_RowReduce)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveWorkedExample(benchmark::State& state) {
  const auto basis = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(solve(basis));
}
BENCHMARK(BM_SolveWorkedExample);

void BM_SolveTwoStage(benchmark::State& state) {
  const PrimeContext c2{2, 1};
  auto one = TruncatedSeries::constant(c2, 1, FieldElement::one(c2));
  auto z = TruncatedSeries::variable(c2, 1, 0);
  auto zero = TruncatedSeries(c2, 1);
  const auto basis = SubspaceBasis::build(
      {SeriesVector({one, zero}), SeriesVector({z, one}), SeriesVector({zero, one})});
  for (auto _ : state) benchmark::DoNotOptimize(solve(basis));
}
BENCHMARK(BM_SolveTwoStage);

void BM_GridEnumerate(benchmark::State& state) {
  const PrimeContext c2{2, 1};
  std::vector<std::vector<FieldElement>> t = {
      {FieldElement::from_rational(c2, 2), FieldElement::zero(c2)},
      {FieldElement::zero(c2), FieldElement::one(c2)}};
  const unsigned L = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_valuation_set(t, L));
}
BENCHMARK(BM_GridEnumerate)->Arg(3)->Arg(5)->Arg(8);

void BM_InjectivityGrid(benchmark::State& state) {
  const auto basis = worked_example();
  const auto cert = solve(basis).second;
  const unsigned L = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_injectivity_grid(basis, cert.witness, L));
  }
}
BENCHMARK(BM_InjectivityGrid)->Arg(3)->Arg(6);

void BM_VerifyCertificate(benchmark::State& state) {
  const Json cert = certificate_to_json(solve(worked_example()).second);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert));
}
BENCHMARK(BM_VerifyCertificate);

}  // namespace

BENCHMARK_MAIN();
