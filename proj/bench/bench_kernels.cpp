// Parallel kernels against their serial references. Arguments are problem sizes.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wsh/linalg.hpp"
#include "wsh/shuffle.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();

FMatrix random_matrix(int r, int c, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  FMatrix m(r, c);
  for (auto& x : m.data()) x = FieldElem(d(rng)) + k * FieldElem(d(rng));
  return m;
}

// Rows of a product with inner dimension n / 2, so the rank is deficient.
std::vector<FVec> deficient_rows(int n) {
  const FMatrix m = matmul_serial(random_matrix(n, n / 2, 1), random_matrix(n / 2, n, 2));
  std::vector<FVec> rows;
  for (int i = 0; i < m.rows(); ++i) {
    FVec v(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(j)] = m(i, j);
    rows.push_back(std::move(v));
  }
  return rows;
}

template <FMatrix (*F)(const FMatrix&, const FMatrix&)>
void BM_matmul(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const FMatrix a = random_matrix(n, n, 3), b = random_matrix(n, n, 4);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, b));
}

template <CertifiedRank (*F)(const std::vector<FVec>&)>
void BM_rank(benchmark::State& st) {
  const auto rows = deficient_rows(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(rows));
}

template <ShuffleElem (*F)(const ShuffleElem&, const ShuffleElem&, const FieldElem&)>
void BM_star(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const ShuffleElem p = random_shuffle_elem(n, 2, 5, k), q = random_shuffle_elem(n, 2, 6, k);
  for (auto _ : st) benchmark::DoNotOptimize(F(p, q, k));
}

}  // namespace

BENCHMARK(BM_matmul<matmul>)->Name("matmul/parallel")->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul<matmul_serial>)->Name("matmul/serial")->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank<certified_rank>)->Name("certified_rank/parallel")->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank<certified_rank_serial>)->Name("certified_rank/serial")->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_star<star_product>)->Name("star_product/parallel")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_star<star_product_serial>)->Name("star_product/serial")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
