#include <benchmark/benchmark.h>

#include "repkit/decompose.hpp"

using namespace repkit;

namespace {

Matrix dense_rational(std::size_t n) {
  Field Q = Field::rationals();
  Matrix m(Q, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = Q.from_rational(mpq_class(static_cast<long>(i * n + j + 1),
                                             static_cast<long>(j + 2)));
    }
  }
  return m;
}

}  // namespace

static void BM_RationalMatMul(benchmark::State& state) {
  Matrix a = dense_rational(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * a);
  }
}
BENCHMARK(BM_RationalMatMul)->Arg(4)->Arg(8);

static void BM_CyclotomicMultiply(benchmark::State& state) {
  Field F = Field::cyclotomic(12);
  FieldElement a = F.root_of_unity(1) + F.integer(3);
  FieldElement b = F.root_of_unity(5) - F.from_rational(mpq_class(2, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CyclotomicMultiply);

static void BM_CharPolyBerkowitz(benchmark::State& state) {
  Matrix a = dense_rational(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(a));
  }
}
BENCHMARK(BM_CharPolyBerkowitz)->Arg(4)->Arg(6);

static void BM_ConvolutionS4(benchmark::State& state) {
  Field Q = Field::rationals();
  FiniteGroup g = FiniteGroup::symmetric(4);
  std::vector<FieldElement> values;
  for (std::size_t i = 0; i < g.order(); ++i) {
    values.push_back(Q.from_rational(mpq_class(static_cast<long>(i % 5) - 2, 3)));
  }
  GroupFunction f(g, Q, values);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, f));
  }
}
BENCHMARK(BM_ConvolutionS4);

static void BM_CommutantRegularZ6(benchmark::State& state) {
  Field F = Field::cyclotomic(6);
  Representation reg = Representation::left_regular(FiniteGroup::cyclic(6), F);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutant(reg));
  }
}
BENCHMARK(BM_CommutantRegularZ6);

static void BM_DecomposeRegularS3(benchmark::State& state) {
  Field Q = Field::rationals();
  Representation reg = Representation::left_regular(FiniteGroup::symmetric(3), Q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(reg, false));
  }
}
BENCHMARK(BM_DecomposeRegularS3);

BENCHMARK_MAIN();
