#include <benchmark/benchmark.h>

#include "absirr/certify.hpp"
#include "absirr/family.hpp"
#include "absirr/linalg.hpp"
#include "absirr/numtheory.hpp"
#include "absirr/parse.hpp"
#include "absirr/criterion.hpp"

namespace {

using namespace absirr;

const char* const kNinth = "x^9*y-9*x^9-2*x+9*y+2";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_poly(kNinth));
}
BENCHMARK(BM_Parse);

void BM_BuildMatrix(benchmark::State& state) {
  const PolyZ f = parse_poly(kNinth);
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(f));
}
BENCHMARK(BM_BuildMatrix);

void BM_RankOverZ(benchmark::State& state) {
  const auto rm = build_matrix(parse_poly(kNinth));
  for (auto _ : state) benchmark::DoNotOptimize(rank(rm.body));
}
BENCHMARK(BM_RankOverZ);

void BM_MaxMinor(benchmark::State& state) {
  const auto rm = build_matrix(parse_poly(kNinth));
  for (auto _ : state) benchmark::DoNotOptimize(max_minor(rm.body, rm.shape.cols()));
}
BENCHMARK(BM_MaxMinor);

void BM_RankModP(benchmark::State& state) {
  const PrimeField field(Int("186940255267545011"));
  const auto rm = build_matrix(reduce_mod(parse_poly(kNinth), field).poly);
  for (auto _ : state) benchmark::DoNotOptimize(rank(rm.body));
}
BENCHMARK(BM_RankModP);

// Family members of growing bidegree (m, m).
void BM_CertifyChar0(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const PolyZ f = family_poly(m, m, 5);
  for (auto _ : state) benchmark::DoNotOptimize(certify_char0(f));
}
BENCHMARK(BM_CertifyChar0)->DenseRange(1, 4);

void BM_FactorSemiprime(benchmark::State& state) {
  const Int n = Int("1000003") * Int("1000000007");
  for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_IsPrimeLarge(benchmark::State& state) {
  const Int p("170141183460469231731687303715884105727");
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(p));
}
BENCHMARK(BM_IsPrimeLarge);

}  // namespace

BENCHMARK_MAIN();
