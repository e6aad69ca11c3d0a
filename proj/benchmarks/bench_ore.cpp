#include "ore/desing.hpp"
#include "ore/diffdesing.hpp"
#include "ore/lclm.hpp"
#include "ore/text.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ore;

namespace {

const char* const kPartial = "x^3*D^3 - 3*x^2*D^2 - 2*x*D + 10";
const char* const kClassical = "(x-1)*(x^2-3*x+3)*x*D^2 - (x^2-3)*(x^2-2*x+2)*D + (x-2)*(2*x^2-3*x+3)";

AlgebraRef algebra(int which) {
  static const AlgebraRef diff = OreAlgebra::differential();
  static const AlgebraRef shift = OreAlgebra::shift();
  static const AlgebraRef squaring = OreAlgebra::custom(parse_poly("x^2"), parse_poly("1 - x"));
  return which == 0 ? diff : which == 1 ? shift : squaring;
}

// Dense operator of the given order with random integer polynomial coefficients.
OrePoly random_operator(const AlgebraRef& alg, int order, int degree, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Poly> c;
  for (int k = 0; k <= order; ++k) {
    std::vector<Rational> p;
    for (int j = 0; j <= degree; ++j) p.emplace_back(coeff(gen));
    if (p.back() == 0) p.back() = 1;
    c.emplace_back(std::move(p));
  }
  return OrePoly::from_polys(alg, c);
}

void BM_OreMul(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const AlgebraRef alg = algebra(static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  const OrePoly a = random_operator(alg, order, 3, gen), b = random_operator(alg, order, 3, gen);
  for (auto _ : state) benchmark::DoNotOptimize(ore_mul(a, b));
}
BENCHMARK(BM_OreMul)->ArgsProduct({{0, 1, 2}, {2, 4, 8}});

void BM_Nullspace(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const int order = static_cast<int>(state.range(0));
  const OrePoly l = random_operator(algebra(0), order, 3, gen), a = random_operator(algebra(0), order, 3, gen);
  const PolyMatrix m = lclm_ansatz_matrix(l, a, order, order);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->DenseRange(1, 4);

void BM_LclmAnsatz(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const AlgebraRef alg = algebra(static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  const OrePoly l = random_operator(alg, order, 3, gen), a = random_operator(alg, order, 3, gen);
  for (auto _ : state) benchmark::DoNotOptimize(lclm_ansatz(l, a));
}
BENCHMARK(BM_LclmAnsatz)->ArgsProduct({{0, 1, 2}, {1, 2, 3}});

void BM_LclmEuclid(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const AlgebraRef alg = algebra(static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  const OrePoly l = random_operator(alg, order, 3, gen), a = random_operator(alg, order, 3, gen);
  for (auto _ : state) benchmark::DoNotOptimize(lclm_euclid(l, a));
}
BENCHMARK(BM_LclmEuclid)->ArgsProduct({{0, 1, 2}, {1, 2, 3}});

void BM_LasVegas(benchmark::State& state) {
  const OrePoly l = parse_operator(kPartial, algebra(0));
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(desingularize_lv(l, n, ++seed, 100));
}
BENCHMARK(BM_LasVegas)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Classical(benchmark::State& state) {
  const OrePoly l = parse_operator(kClassical, algebra(0));
  for (auto _ : state) benchmark::DoNotOptimize(classical_desingularize(l));
}
BENCHMARK(BM_Classical)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
