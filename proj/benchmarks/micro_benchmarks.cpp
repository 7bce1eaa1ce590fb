// Micro-benchmarks for the paths that dominate real runs: polynomial
// products around the Karatsuba threshold, parameter-polynomial expansion,
// tie-place height iteration, orbit decision, and the rational root search.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "charpdyn/dynamics.hpp"
#include "charpdyn/finite_field.hpp"
#include "charpdyn/param_poly.hpp"
#include "charpdyn/lab.hpp"
#include "charpdyn/places.hpp"
#include "charpdyn/roots.hpp"

using namespace charpdyn;

namespace {

PolyFq random_poly(const FieldPtr& F, int degree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FqElem> cs;
  auto elems = enumerate_field(F);
  for (int i = 0; i < degree; ++i)
    cs.push_back(elems[std::uniform_int_distribution<size_t>(0, elems.size() - 1)(rng)]);
  cs.push_back(FqElem::one(F));  // pin the degree
  return PolyFq(F, cs);
}

void BM_poly_mul(benchmark::State& state) {
  auto F = FqField::make(3, 1);
  int deg = static_cast<int>(state.range(0));
  PolyFq a = random_poly(F, deg, 11);
  PolyFq b = random_poly(F, deg, 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_poly_mul_extension(benchmark::State& state) {
  auto F = FqField::make(3, 4);  // F_81: the per-coefficient work is k^2
  int deg = static_cast<int>(state.range(0));
  PolyFq a = random_poly(F, deg, 21);
  PolyFq b = random_poly(F, deg, 22);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul_extension)->Arg(64)->Arg(256);

void BM_param_poly(benchmark::State& state) {
  auto F = FqField::make(3, 1);
  auto fam = FamilyParams::make(F, 4);  // prime-to-p degree: the slow lane
  RatFunc gamma = RatFunc::variable(F);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(param_poly(n, gamma, fam));
}
BENCHMARK(BM_param_poly)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_param_poly_frobenius(benchmark::State& state) {
  auto F = FqField::make(2, 1);
  auto fam = FamilyParams::make(F, 4);  // d = p^2: pure relabeling
  RatFunc gamma = RatFunc::variable(F);
  for (auto _ : state) benchmark::DoNotOptimize(param_poly(5, gamma, fam));
}
BENCHMARK(BM_param_poly_frobenius);

void BM_local_height_tie(benchmark::State& state) {
  // eternal tie at v = (t): every budgeted iteration doubles the operand
  // degrees, so this tracks the worst-case unresolved-place cost
  auto F = FqField::make(2, 1);
  auto fam = FamilyParams::make(F, 2);
  PolyFq t = PolyFq::variable(F);
  RatFunc gamma(t * t + PolyFq::one(F), t);
  RatFunc lambda(t * t * t + t + PolyFq::one(F), t * t);
  Place v = Place::finite(t);
  int budget = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(local_canonical_height(gamma, lambda, v, fam, budget));
}
BENCHMARK(BM_local_height_tie)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_decide_preperiodic(benchmark::State& state) {
  auto F = FqField::make(3, 1);
  auto fam = FamilyParams::make(F, 2);
  RatFunc gamma = RatFunc::variable(F);
  RatFunc lambda(PolyFq::from_ints(F, {0, 2, 2}));  // 2t^2 + 2t: a genuine two-cycle
  for (auto _ : state) benchmark::DoNotOptimize(decide_preperiodic(gamma, lambda, fam));
}
BENCHMARK(BM_decide_preperiodic);

void BM_global_height(benchmark::State& state) {
  auto F = FqField::make(3, 1);
  auto fam = FamilyParams::make(F, 2);
  RatFunc gamma = RatFunc::variable(F);
  RatFunc lambda(PolyFq::from_ints(F, {0, 0, 0, 1}));  // t^3: escapes at infinity
  for (auto _ : state) benchmark::DoNotOptimize(global_canonical_height(gamma, lambda, fam));
}
BENCHMARK(BM_global_height);

void BM_preperiodic_params(benchmark::State& state) {
  auto F = FqField::make(3, 1);
  auto fam = FamilyParams::make(F, 2);
  RatFunc gamma = RatFunc::variable(F);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(preperiodic_params(gamma, fam, n, n - 1));
}
BENCHMARK(BM_preperiodic_params)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_support(benchmark::State& state) {
  // distinct-degree factorization cost behind support(); the operand mixes
  // small factors with one irreducible of middling degree
  auto F = FqField::make(3, 1);
  PolyFq x = random_poly(F, static_cast<int>(state.range(0)), 31);
  RatFunc r(x, PolyFq::variable(F));
  for (auto _ : state) benchmark::DoNotOptimize(support({r}));
}
BENCHMARK(BM_support)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
