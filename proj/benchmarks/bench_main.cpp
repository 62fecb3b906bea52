#include <benchmark/benchmark.h>

#include <random>

#include "picard/groebner.hpp"
#include "picard/obstruction.hpp"
#include "picard/parse.hpp"

using namespace picard;

namespace {

HomogeneousPoly fermat(int n, int d) {
  LaurentPoly p(n + 1);
  for (int i = 0; i <= n; ++i) {
    Exponent e(n + 1);
    e[i] = d;
    p.add_term(e, 1);
  }
  return HomogeneousPoly(std::move(p), d);
}

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms) {
  std::uniform_int_distribution<int> exp(-2, 4);
  std::uniform_int_distribution<int> coef(-9, 9);
  LaurentPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

void BM_LaurentMul(benchmark::State& state) {
  std::mt19937_64 rng(7);
  LaurentPoly a = random_poly(rng, 5, static_cast<int>(state.range(0)));
  LaurentPoly b = random_poly(rng, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_LaurentMul)->Arg(8)->Arg(32)->Arg(128);

void BM_ReduceModF(benchmark::State& state) {
  HomogeneousPoly F = fermat(4, 5);
  FReducer red(F);
  LaurentPoly p = parse_poly("x0^14 x1^-2 x2^-1 + 3 x0^9 x3^-3 x4", 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(red.reduce(p));
  }
}
BENCHMARK(BM_ReduceModF);

void BM_BuchbergerPerturbedQuintic(benchmark::State& state) {
  HomogeneousPoly F(parse_poly("x0^5 + x1^5 + x2^5 + x3^5 + x4^5 + x0 x1 x2 x3 x4", 4), 5);
  Ideal I;
  for (int i = 0; i < 5; ++i)
    I.generators.emplace_back(partial_derivative(F.poly(), i), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(I));
  }
}
BENCHMARK(BM_BuchbergerPerturbedQuintic);

void BM_TruncatedCohomology(benchmark::State& state) {
  HomogeneousPoly F = fermat(4, 5);
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_cohomology_dim(F, q, 5));
  }
}
BENCHMARK(BM_TruncatedCohomology)->Arg(1)->Arg(3);

void BM_ObstructionCertificate(benchmark::State& state) {
  HomogeneousPoly F = fermat(4, 5);
  HypothesisReport hyp = check_hypotheses(F, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(obstruction_certificate(F, -1, hyp));
  }
}
BENCHMARK(BM_ObstructionCertificate);

void BM_K3Kernel(benchmark::State& state) {
  HomogeneousPoly F = fermat(3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k3_kernel(F, 4));
  }
}
BENCHMARK(BM_K3Kernel);

}  // namespace

BENCHMARK_MAIN();
