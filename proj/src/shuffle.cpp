#include "wsh/shuffle.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wsh {

MultiPoly kernel_h(const FieldElem& kappa, int var) {
  const MultiPoly u = MultiPoly::variable(var);
  return (u + MultiPoly(1) - MultiPoly(kappa)) * (u - MultiPoly(1)) * (u + MultiPoly(kappa));
}

MultiPoly kernel_k(const FieldElem& kappa, int var) {
  const MultiPoly u = MultiPoly::variable(var);
  return (u - MultiPoly(1) + MultiPoly(kappa)) * (u + MultiPoly(1)) * (u - MultiPoly(kappa));
}

MultiPoly kernel_h_difference(const FieldElem& kappa, int a, int b) {
  return kernel_h(kappa, 0).substitute({{0, MultiPoly::variable(b) - MultiPoly::variable(a)}});
}

ShuffleElem::ShuffleElem(int n, MultiPoly p) : n_(n), p_(std::move(p)) {
  if (n < 0 || p_.num_vars() > n) throw std::invalid_argument("polynomial uses more variables than declared");
  if (!p_.is_symmetric(n)) throw std::invalid_argument("shuffle element is not symmetric");
}

ShuffleElem ShuffleElem::power(int k) { return {1, MultiPoly::monomial({k}, FieldElem(1))}; }

namespace {

// r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Numerator of one shuffle term over prod_{i<j}(z_i - z_j).
MultiPoly shuffle_term(const ShuffleElem& p, const ShuffleElem& q, const std::vector<int>& s, const FieldElem& kappa) {
  const int r = p.vars(), n = p.vars() + q.vars();
  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (int i : s) in_s[static_cast<std::size_t>(i)] = true;
  std::vector<int> rename(static_cast<std::size_t>(n));
  {
    int a = 0, b = r;
    for (int i = 0; i < n; ++i) rename[static_cast<std::size_t>(in_s[static_cast<std::size_t>(i)] ? a++ : b++)] = i;
  }
  std::vector<int> pp(rename.begin(), rename.begin() + r);
  std::vector<int> qq(static_cast<std::size_t>(q.vars()));
  for (int j = 0; j < q.vars(); ++j) qq[static_cast<std::size_t>(j)] = rename[static_cast<std::size_t>(r + j)];
  MultiPoly term = p.poly().permuted(pp) * q.poly().permuted(qq);
  const MultiPoly h = kernel_h(kappa, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool si = in_s[static_cast<std::size_t>(i)], sj = in_s[static_cast<std::size_t>(j)];
      const MultiPoly diff = MultiPoly::variable(i) - MultiPoly::variable(j);
      if (si == sj) {
        term = term * diff;
      } else {
        // g(z_a - z_b) with a in S; (z_i - z_j) / (z_a - z_b) = +-1
        const int a = si ? i : j, b = si ? j : i;
        term = term * h.substitute({{0, MultiPoly::variable(a) - MultiPoly::variable(b)}});
        if (!si) term = term * FieldElem(-1);
      }
    }
  return term;
}

MultiPoly divide_vandermonde(MultiPoly num, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      try {
        num = num.divexact_in(MultiPoly::variable(i) - MultiPoly::variable(j), i);
      } catch (const std::domain_error&) {
        throw std::domain_error("shuffle sum not polynomial");
      }
    }
  return num;
}

ShuffleElem star(const ShuffleElem& p, const ShuffleElem& q, const FieldElem& kappa, bool parallel) {
  if (p.vars() == 0) return {q.vars(), p.poly() * q.poly()};
  if (q.vars() == 0) return {p.vars(), p.poly() * q.poly()};
  const int n = p.vars() + q.vars();
  const auto sh = subsets(n, p.vars());
  std::vector<MultiPoly> terms(sh.size());
  std::exception_ptr err;
  const long m = static_cast<long>(sh.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < m; ++i) {
    try {
      terms[static_cast<std::size_t>(i)] = shuffle_term(p, q, sh[static_cast<std::size_t>(i)], kappa);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  MultiPoly sum;
  for (const auto& t : terms) sum += t;
  return {n, divide_vandermonde(std::move(sum), n)};
}

}  // namespace

ShuffleElem star_product(const ShuffleElem& p, const ShuffleElem& q, const FieldElem& kappa) {
  return star(p, q, kappa, true);
}

ShuffleElem star_product_serial(const ShuffleElem& p, const ShuffleElem& q, const FieldElem& kappa) {
  return star(p, q, kappa, false);
}

MultiPoly divide_by_h(const FVec& coeffs, int kmax, const FieldElem& kappa) {
  MultiPoly a;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= kmax; ++l) {
      const FieldElem& c = coeffs[static_cast<std::size_t>(k * (kmax + 1) + l)];
      if (!c.is_zero()) a += MultiPoly::monomial({k, l}, c);
    }
  return a.divexact_in(kernel_h_difference(kappa, 0, 1), 0);
}

ShuffleKernelReport rank2_kernel_compare(Evaluator& ev, int kmax) {
  ShuffleKernelReport out;
  out.kmax = kmax;
  OpContext& ctx = ev.context();
  const FieldElem kappa = ctx.kappa();

  // Shuffle side: coefficient vectors over the monomials of all products.
  std::vector<MultiPoly> prods;
  for (int a = 0; a <= kmax; ++a)
    for (int b = 0; b <= kmax; ++b)
      prods.push_back(star_product(ShuffleElem::power(a), ShuffleElem::power(b), kappa).poly());
  out.products = static_cast<int>(prods.size());
  std::map<Exponent, int> cols;
  for (const auto& p : prods)
    for (const auto& [e, c] : p.terms()) cols.emplace(e, 0);
  int idx = 0;
  for (auto& [e, i] : cols) i = idx++;
  std::vector<FVec> rows;
  for (const auto& p : prods) {
    FVec v(cols.size());
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(cols.at(e))] = c;
    rows.push_back(std::move(v));
  }
  const std::vector<FVec> kernel = left_kernel(rows);
  out.shuffle_kernel_dim = static_cast<int>(kernel.size());

  // Operator side.
  const int n_max = ctx.max_degree();
  std::vector<FVec> images;
  std::vector<const GradedOp*> ops;
  for (int a = 0; a <= kmax; ++a)
    for (int b = 0; b <= kmax; ++b) {
      ops.push_back(&ev.word({{1, a}, {1, b}}));
      images.push_back(ops.back()->restricted(0, n_max - 2).flatten());
    }
  out.operator_rank = certified_rank(images).rank;
  out.operator_kernel_dim = out.products - out.operator_rank;

  out.shuffle_kernel_in_operator_kernel = true;
  out.divisible = true;
  for (const auto& v : kernel) {
    std::vector<std::pair<FieldElem, const GradedOp*>> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) terms.emplace_back(v[i], ops[i]);
    if (!lincomb(terms).is_zero()) out.shuffle_kernel_in_operator_kernel = false;
    try {
      if (!divide_by_h(v, kmax, kappa).is_symmetric(2)) out.divisible = false;
    } catch (const std::domain_error&) {
      out.divisible = false;
    }
  }
  return out;
}

ShuffleElem random_shuffle_elem(int n, int max_degree, std::uint64_t seed, const FieldElem& kappa) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-3, 3), pick(0, 2);
  MultiPoly acc;
  for (int t = 0; t < 2; ++t) {
    Exponent e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = deg(rng);
    const FieldElem c = FieldElem(coef(rng)) + (pick(rng) == 0 ? kappa : FieldElem());
    if (c.is_zero()) continue;
    // symmetrize the monomial
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Exponent f(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
      while (!f.empty() && f.back() == 0) f.pop_back();
      acc += MultiPoly::monomial(f, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (acc.is_zero()) acc = MultiPoly(1);
  return {n, acc};
}

}  // namespace wsh
