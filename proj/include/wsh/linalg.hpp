#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsh/matrix.hpp"

namespace wsh {

// ---- products -------------------------------------------------------------

/// a * b over Q(k). Each row of a and column of b is brought to a common
/// denominator once, so every output entry costs one normalization. Rows of
/// the result are computed in parallel.
FMatrix matmul(const FMatrix& a, const FMatrix& b);
/// Reference product with per-term field arithmetic, single-threaded.
FMatrix matmul_serial(const FMatrix& a, const FMatrix& b);

FMatrix add(const FMatrix& a, const FMatrix& b);
FMatrix sub(const FMatrix& a, const FMatrix& b);
FMatrix scale(const FMatrix& a, const FieldElem& s);
/// diag(d) * a.
FMatrix scale_rows(const FMatrix& a, const FVec& d);
/// a * diag(d).
FMatrix scale_cols(const FMatrix& a, const FVec& d);
/// Inverse by Gauss-Jordan; throws std::domain_error if singular.
FMatrix inverse(const FMatrix& a);

// ---- exact elimination over Q(k) ------------------------------------------

struct Echelon {
  FMatrix rref;
  std::vector<int> pivots;  // pivot column of each nonzero row
};
/// Reduced row echelon form over Q(k).
Echelon rref(const FMatrix& a);
/// Basis of {c : sum_i c_i rows[i] = 0}, one vector of length rows.size() each.
std::vector<FVec> left_kernel(const std::vector<FVec>& rows);
/// Rank by fraction-free elimination on the cleared integer-polynomial rows.
/// Reference implementation; cost grows quickly with size.
int bareiss_rank(const std::vector<FVec>& rows);

// ---- modular rank -----------------------------------------------------------

/// A rank observed after reducing modulo p at k = t. It never exceeds the rank
/// over Q(k), so it is an exact lower bound.
struct RankSample {
  int rank = 0;
  std::vector<int> independent;  // greedy independent subset, in input order
  std::vector<int> pivot_cols;
};
/// Rank of rows modulo p at k = t; nullopt if a denominator vanishes there.
std::optional<RankSample> rank_mod(const std::vector<FVec>& rows, std::uint32_t p, std::uint64_t t);
/// First usable sample along a fixed sequence of evaluation points.
RankSample rank_lower_bound(const std::vector<FVec>& rows);

/// A sample attaining `rank`, which must be the exact rank. Its independent
/// rows and pivot columns are then independent over Q(k) as well.
RankSample sample_with_rank(const std::vector<FVec>& rows, int rank);

/// Exact rank over Q(k) with its certificate: every (rank+1)-minor is a
/// polynomial of degree at most degree_bound whose coefficients are below
/// coefficient_bits in absolute value, and it vanishes at degree_bound + 1
/// points modulo each of `primes` primes whose product exceeds that bound.
struct CertifiedRank {
  int rank = 0;
  long degree_bound = 0;
  long coefficient_bits = 0;
  int primes = 0;
  long samples = 0;
};
/// Certified rank; samples run in parallel over (prime, point) pairs.
CertifiedRank certified_rank(const std::vector<FVec>& rows);
/// Same computation on one thread; reference for certified_rank.
CertifiedRank certified_rank_serial(const std::vector<FVec>& rows);

/// Whether v lies in span(rows), decided by two certified ranks.
bool in_span(const std::vector<FVec>& rows, const FVec& v);

/// Primes below 2^31 in decreasing order, starting at the largest.
std::vector<std::uint32_t> large_primes(int count);

}  // namespace wsh
