#include <random>

#include "doctest.h"
#include "wsh/linalg.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();

FieldElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> shape(0, 3);
  switch (shape(rng)) {
    case 0:
      return FieldElem(c(rng));
    case 1:
      return FieldElem(c(rng)) + k * FieldElem(c(rng));
    case 2:
      return (FieldElem(c(rng)) + k * k) / (k + FieldElem(5));
    default:
      return FieldElem(c(rng)) * k.inverse();
  }
}

FMatrix random_matrix(int r, int c, std::mt19937& rng) {
  FMatrix m(r, c);
  for (auto& x : m.data()) x = random_elem(rng);
  return m;
}

std::vector<FVec> rows_of(const FMatrix& m) {
  std::vector<FVec> out;
  for (int i = 0; i < m.rows(); ++i) {
    FVec v(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(j)] = m(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("parallel product agrees with the serial reference") {
  std::mt19937 rng(1);
  for (int t = 0; t < 4; ++t) {
    const FMatrix a = random_matrix(5, 4, rng), b = random_matrix(4, 6, rng);
    CHECK(matmul(a, b) == matmul_serial(a, b));
  }
  CHECK(matmul(FMatrix(0, 3), FMatrix(3, 2)) == FMatrix(0, 2));
  CHECK_THROWS_AS(matmul(FMatrix(2, 3), FMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse and rref") {
  std::mt19937 rng(2);
  const FMatrix a = random_matrix(4, 4, rng);
  CHECK(matmul(a, inverse(a)) == FMatrix::identity(4));
  FMatrix s(2, 2);
  s(0, 0) = k;
  s(0, 1) = k * k;
  s(1, 0) = FieldElem(1);
  s(1, 1) = k;
  CHECK_THROWS_AS(inverse(s), std::domain_error);
  const Echelon e = rref(s);
  CHECK(e.pivots == std::vector<int>{0});
}

TEST_CASE("ranks of products with a known inner dimension") {
  std::mt19937 rng(3);
  for (int inner = 1; inner <= 4; ++inner) {
    const FMatrix m = matmul(random_matrix(6, inner, rng), random_matrix(inner, 7, rng));
    const auto rows = rows_of(m);
    const int r = static_cast<int>(rref(m).pivots.size());
    CHECK(r == inner);
    CHECK(certified_rank(rows).rank == r);
    CHECK(certified_rank_serial(rows).rank == r);
    CHECK(bareiss_rank(rows) == r);
    CHECK(rank_lower_bound(rows).rank <= r);
  }
}

TEST_CASE("generic rank is not fooled by special values of k") {
  // det = k^2 - 9 vanishes at k = +-3 only
  std::vector<FVec> rows{{FieldElem(1), k}, {k, FieldElem(9)}};
  CHECK(certified_rank(rows).rank == 2);
  const auto s = sample_with_rank(rows, 2);
  CHECK(s.independent.size() == 2);
  CHECK_THROWS_AS(sample_with_rank(rows, 1), std::logic_error);
}

TEST_CASE("left kernel and span membership") {
  std::mt19937 rng(4);
  const FMatrix m = matmul(random_matrix(5, 2, rng), random_matrix(2, 4, rng));
  const auto rows = rows_of(m);
  const auto ker = left_kernel(rows);
  CHECK(ker.size() == 3);
  for (const auto& c : ker) {
    FVec sum(4);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j) sum[j] += c[i] * rows[i][j];
    for (const auto& x : sum) CHECK(x.is_zero());
  }
  FVec comb(4);
  for (std::size_t j = 0; j < 4; ++j) comb[j] = rows[0][j] * k + rows[1][j];
  CHECK(in_span(rows, comb));
  CHECK_FALSE(in_span({FVec{FieldElem(1), FieldElem(), FieldElem()}}, FVec{FieldElem(), k, FieldElem()}));
  CHECK(left_kernel({FVec{}, FVec{}}).size() == 2);
}

TEST_CASE("large primes are decreasing primes") {
  const auto p = large_primes(4);
  REQUIRE(p.size() == 4);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] < p[i - 1]);
  for (auto q : p) {
    bool prime = true;
    for (std::uint32_t d = 2; d < 50000 && d * d <= q; ++d) prime = prime && q % d != 0;
    CHECK(prime);
  }
}
