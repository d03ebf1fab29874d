#include <benchmark/benchmark.h>

#include <random>

#include "splitorder/splitorder.hpp"

namespace {

using namespace splitorder;

void BM_ConditionsBch(benchmark::State& state) {
  const auto stages = static_cast<int>(state.range(0));
  const auto order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(conditions_bch(SchemeShape(stages), order));
}
BENCHMARK(BM_ConditionsBch)->Args({2, 3})->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_ConditionsTaylor(benchmark::State& state) {
  const auto stages = static_cast<int>(state.range(0));
  const auto order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(conditions_taylor(SchemeShape(stages), order));
}
BENCHMARK(BM_ConditionsTaylor)->Args({2, 3})->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

// log(e^{a1 A} e^{b1 B}) with symbolic weights.
void BM_NcLogOfProduct(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const NCSeries x = NCSeries::letter(2, n, kA, CoeffPoly(SymbolId::a(1)));
  const NCSeries y = NCSeries::letter(2, n, kB, CoeffPoly(SymbolId::b(1)));
  const NCSeries product = nc_exp(x) * nc_exp(y);
  for (auto _ : state) benchmark::DoNotOptimize(nc_log(product));
}
BENCHMARK(BM_NcLogOfProduct)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_LieDecompose(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  LieDecomposition d;
  d.degree = q;
  long k = 1;
  for (const auto& w : lyndon_words_of_degree(2, q)) d.coefficients.emplace(w, CoeffPoly(Rational(k++, 7)));
  const NCSeries f = d.reconstruct(q);
  for (auto _ : state) benchmark::DoNotOptimize(lie_decompose(f, q));
}
BENCHMARK(BM_LieDecompose)->DenseRange(4, 8, 2);

void BM_MatrixExp(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exp(m));
}
BENCHMARK(BM_MatrixExp)->RangeMultiplier(2)->Range(4, 64);

void BM_EmpiricalOrder(benchmark::State& state) {
  const ConcreteScheme strang({Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}, "strang");
  for (auto _ : state) benchmark::DoNotOptimize(empirical_order(strang, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_EmpiricalOrder)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
