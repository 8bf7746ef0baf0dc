#include "wsh/linalg.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace wsh {

namespace {

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const UPoly g = gcd(a, b);
  UPoly r = a.divexact(g) * b;
  return r.leading() < 0 ? -r : r;
}

void check_inner(const FMatrix& a, const FMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
}

// ---- arithmetic modulo p < 2^31 -------------------------------------------

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint32_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Greedy row echelon modulo p: rows are taken in order and kept if they are
// independent of the rows kept before them.
RankSample echelon_mod(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  RankSample out;
  std::vector<const std::vector<std::uint32_t>*> basis;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto& row = m[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int c = out.pivot_cols[b];
      const std::uint32_t f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      const auto& br = *basis[b];
      const std::uint32_t nf = p - f;
      for (std::size_t j = static_cast<std::size_t>(c); j < row.size(); ++j) {
        if (br[j] == 0) continue;
        row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(nf) * br[j]) % p);
      }
    }
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    const std::uint32_t inv = invmod(row[c], p);
    for (std::size_t j = c; j < row.size(); ++j) row[j] = mulmod(row[j], inv, p);
    // Keep pivot order sorted so later reductions only touch columns >= pivot.
    std::size_t pos = 0;
    while (pos < out.pivot_cols.size() && out.pivot_cols[pos] < static_cast<int>(c)) ++pos;
    out.pivot_cols.insert(out.pivot_cols.begin() + static_cast<long>(pos), static_cast<int>(c));
    basis.insert(basis.begin() + static_cast<long>(pos), &row);
    out.independent.push_back(static_cast<int>(i));
  }
  out.rank = static_cast<int>(basis.size());
  std::sort(out.independent.begin(), out.independent.end());
  return out;
}

// Integer-polynomial form of the rows: denominators and common factors removed.
struct PolyRows {
  std::vector<std::vector<UPoly>> rows;
  std::vector<int> degree;
  std::vector<mpz_class> norm;
  std::size_t cols = 0;
};

PolyRows clear_rows(const std::vector<FVec>& rows, bool parallel) {
  PolyRows out;
  const long m = static_cast<long>(rows.size());
  out.rows.resize(rows.size());
  out.degree.assign(rows.size(), -1);
  out.norm.assign(rows.size(), mpz_class(0));
  out.cols = rows.empty() ? 0 : rows[0].size();
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < m; ++i) {
    const FVec& r = rows[static_cast<std::size_t>(i)];
    UPoly l(1);
    for (const auto& x : r)
      if (!x.is_zero()) l = lcm(l, x.den());
    std::vector<UPoly> pr(r.size());
    UPoly g;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j].is_zero()) continue;
      pr[j] = r[j].num() * l.divexact(r[j].den());
      if (!g.is_one()) g = gcd(g, pr[j]);
    }
    int deg = -1;
    mpz_class norm = 0;
    for (auto& x : pr) {
      if (x.is_zero()) continue;
      if (!g.is_one()) x = x.divexact(g);
      deg = std::max(deg, x.degree());
      norm += x.l1_norm();
    }
    out.rows[static_cast<std::size_t>(i)] = std::move(pr);
    out.degree[static_cast<std::size_t>(i)] = deg;
    out.norm[static_cast<std::size_t>(i)] = norm;
  }
  return out;
}

struct Residues {
  // coefficient residues of every entry, low degree first
  std::vector<std::vector<std::vector<std::uint32_t>>> c;
};

Residues reduce_rows(const PolyRows& pr, std::uint32_t p, bool parallel) {
  Residues out;
  out.c.resize(pr.rows.size());
  const long m = static_cast<long>(pr.rows.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < m; ++i) {
    const auto& row = pr.rows[static_cast<std::size_t>(i)];
    auto& dst = out.c[static_cast<std::size_t>(i)];
    dst.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& co = row[j].coeffs();
      dst[j].resize(co.size());
      for (std::size_t e = 0; e < co.size(); ++e)
        dst[j][e] = static_cast<std::uint32_t>(mpz_fdiv_ui(co[e].get_mpz_t(), p));
    }
  }
  return out;
}

int rank_at(const Residues& rs, std::size_t cols, std::uint32_t p, std::uint32_t t) {
  std::vector<std::vector<std::uint32_t>> m(rs.c.size(), std::vector<std::uint32_t>(cols, 0));
  for (std::size_t i = 0; i < rs.c.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& co = rs.c[i][j];
      std::uint64_t acc = 0;
      for (auto it = co.rbegin(); it != co.rend(); ++it) acc = (acc * t + *it) % p;
      m[i][j] = static_cast<std::uint32_t>(acc);
    }
  }
  return echelon_mod(m, p).rank;
}

mpz_class top_product(std::vector<mpz_class> v, int k) {
  std::sort(v.begin(), v.end(), std::greater<>());
  mpz_class r = 1;
  for (int i = 0; i < k && i < static_cast<int>(v.size()); ++i) r *= v[static_cast<std::size_t>(i)];
  return r;
}

long top_sum(std::vector<int> v, int k) {
  std::sort(v.begin(), v.end(), std::greater<>());
  long r = 0;
  for (int i = 0; i < k && i < static_cast<int>(v.size()); ++i) r += std::max(0, v[static_cast<std::size_t>(i)]);
  return r;
}

CertifiedRank certify(const std::vector<FVec>& rows, bool parallel) {
  CertifiedRank out;
  if (rows.empty()) return out;
  const PolyRows pr = clear_rows(rows, parallel);
  const std::size_t cols = pr.cols;
  const std::vector<std::uint32_t> primes_all = large_primes(1);
  int k;
  {
    const Residues r0 = reduce_rows(pr, primes_all[0], parallel);
    k = rank_at(r0, cols, primes_all[0], 1);
  }
  for (;;) {
    const int full = static_cast<int>(std::min<std::size_t>(rows.size(), cols));
    out.rank = k;
    if (k >= full) {
      out.degree_bound = 0;
      out.coefficient_bits = 0;
      out.primes = 0;
      return out;
    }
    const long degbound = top_sum(pr.degree, k + 1);
    const mpz_class coefbound = top_product(pr.norm, k + 1);
    out.degree_bound = degbound;
    out.coefficient_bits = static_cast<long>(mpz_sizeinbase(coefbound.get_mpz_t(), 2));
    mpz_class modulus = 1;
    std::vector<std::uint32_t> primes;
    for (int n = 1; modulus <= coefbound; ++n) {
      primes = large_primes(n);
      modulus *= primes.back();
    }
    out.primes = static_cast<int>(primes.size());
    out.samples = static_cast<long>(primes.size()) * (degbound + 1);
    int seen = k;
    for (std::uint32_t p : primes) {
      const Residues rs = reduce_rows(pr, p, parallel);
      int local = k;
#pragma omp parallel for schedule(dynamic) reduction(max : local) if (parallel)
      for (long t = 0; t <= degbound; ++t) {
        local = std::max(local, rank_at(rs, cols, p, static_cast<std::uint32_t>(t)));
      }
      seen = std::max(seen, local);
      if (seen > k) break;
    }
    if (seen == k) return out;
    k = seen;
  }
}

}  // namespace

std::vector<std::uint32_t> large_primes(int count) {
  static std::vector<std::uint32_t> cache;
  static std::mutex mu;
  const std::lock_guard<std::mutex> guard(mu);
  std::uint32_t n = cache.empty() ? 2147483647u : cache.back() - 2;
  while (static_cast<int>(cache.size()) < count) {
    while (!is_prime_u32(n)) n -= 2;
    cache.push_back(n);
    n -= 2;
  }
  return {cache.begin(), cache.begin() + count};
}

// ---- products ---------------------------------------------------------------

FMatrix matmul(const FMatrix& a, const FMatrix& b) {
  check_inner(a, b);
  const int m = a.rows(), n = b.cols(), kk = a.cols();
  FMatrix c(m, n);
  if (m == 0 || n == 0 || kk == 0) return c;
  std::vector<UPoly> da(static_cast<std::size_t>(m), UPoly(1)), db(static_cast<std::size_t>(n), UPoly(1));
  Matrix<UPoly> na(m, kk), nb(kk, n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    UPoly l(1);
    for (int k = 0; k < kk; ++k)
      if (!a(i, k).is_zero()) l = lcm(l, a(i, k).den());
    for (int k = 0; k < kk; ++k)
      if (!a(i, k).is_zero()) na(i, k) = a(i, k).num() * l.divexact(a(i, k).den());
    da[static_cast<std::size_t>(i)] = std::move(l);
  }
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < n; ++j) {
    UPoly l(1);
    for (int k = 0; k < kk; ++k)
      if (!b(k, j).is_zero()) l = lcm(l, b(k, j).den());
    for (int k = 0; k < kk; ++k)
      if (!b(k, j).is_zero()) nb(k, j) = b(k, j).num() * l.divexact(b(k, j).den());
    db[static_cast<std::size_t>(j)] = std::move(l);
  }
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      UPoly s;
      for (int k = 0; k < kk; ++k) {
        if (na(i, k).is_zero() || nb(k, j).is_zero()) continue;
        s += na(i, k) * nb(k, j);
      }
      if (!s.is_zero()) c(i, j) = FieldElem::normalize(std::move(s), da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]);
    }
  }
  return c;
}

FMatrix matmul_serial(const FMatrix& a, const FMatrix& b) {
  check_inner(a, b);
  FMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

FMatrix add(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimensions do not match");
  FMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

FMatrix sub(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimensions do not match");
  FMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

FMatrix scale(const FMatrix& a, const FieldElem& s) {
  FMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

FMatrix scale_rows(const FMatrix& a, const FVec& d) {
  FMatrix c = a;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c(i, j) *= d[static_cast<std::size_t>(i)];
  return c;
}

FMatrix scale_cols(const FMatrix& a, const FVec& d) {
  FMatrix c = a;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c(i, j) *= d[static_cast<std::size_t>(j)];
  return c;
}

FMatrix inverse(const FMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = a.rows();
  FMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = FieldElem(1);
  }
  const Echelon e = rref(w);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n) - 1] >= n) {
    throw std::domain_error("singular matrix");
  }
  FMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = e.rref(i, n + j);
  return r;
}

// ---- exact elimination ------------------------------------------------------

Echelon rref(const FMatrix& a) {
  Echelon e{a, {}};
  FMatrix& m = e.rref;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const FieldElem inv = m(row, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      const FieldElem f = m(i, c);
      for (int j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

std::vector<FVec> left_kernel(const std::vector<FVec>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return {};
  const int n = static_cast<int>(rows[0].size());
  FMatrix t(n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t(j, i) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  const Echelon e = rref(t);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<FVec> out;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    FVec v(static_cast<std::size_t>(m));
    v[static_cast<std::size_t>(f)] = FieldElem(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[static_cast<std::size_t>(e.pivots[r])] = -e.rref(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

int bareiss_rank(const std::vector<FVec>& rows) {
  if (rows.empty()) return 0;
  PolyRows pr = clear_rows(rows, false);
  auto& a = pr.rows;
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(pr.cols);
  UPoly prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i) {
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
    const UPoly piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int i = r + 1; i < m; ++i) {
      auto& ri = a[static_cast<std::size_t>(i)];
      const UPoly f = ri[static_cast<std::size_t>(c)];
      for (int j = c; j < n; ++j) {
        UPoly v = piv * ri[static_cast<std::size_t>(j)] - f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        ri[static_cast<std::size_t>(j)] = v.divexact(prev);
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

// ---- modular rank -----------------------------------------------------------

std::optional<RankSample> rank_mod(const std::vector<FVec>& rows, std::uint32_t p, std::uint64_t t) {
  std::vector<std::vector<std::uint32_t>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].resize(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const FieldElem& x = rows[i][j];
      if (x.is_zero()) continue;
      const std::uint32_t d = x.den().eval_mod(t, p);
      if (d == 0) return std::nullopt;
      m[i][j] = mulmod(x.num().eval_mod(t, p), invmod(d, p), p);
    }
  }
  return echelon_mod(m, p);
}

RankSample rank_lower_bound(const std::vector<FVec>& rows) {
  const std::uint32_t p = large_primes(1)[0];
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t t = 1000003ull + 7919ull * i;
    if (auto s = rank_mod(rows, p, t)) return *s;
  }
}

RankSample sample_with_rank(const std::vector<FVec>& rows, int rank) {
  const std::uint32_t p = large_primes(1)[0];
  RankSample best;
  for (std::uint64_t i = 0; i < 64; ++i) {
    const std::uint64_t t = 1000003ull + 7919ull * i;
    auto s = rank_mod(rows, p, t);
    if (!s) continue;
    if (s->rank == rank) return *s;
    if (s->rank > rank) throw std::logic_error("modular rank exceeds the stated rank");
  }
  throw std::runtime_error("no evaluation point attains the rank");
}

CertifiedRank certified_rank(const std::vector<FVec>& rows) { return certify(rows, true); }

CertifiedRank certified_rank_serial(const std::vector<FVec>& rows) { return certify(rows, false); }

bool in_span(const std::vector<FVec>& rows, const FVec& v) {
  std::vector<FVec> ext = rows;
  ext.push_back(v);
  return certified_rank(ext).rank == certified_rank(rows).rank;
}

}  // namespace wsh
