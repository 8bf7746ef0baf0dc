#include "wsh/operators.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wsh {

// ---- GradedOp ---------------------------------------------------------------

std::pair<int, int> GradedOp::window() const {
  if (blocks.empty()) throw std::runtime_error("truncation too small");
  return {blocks.begin()->first, blocks.rbegin()->first};
}

bool GradedOp::is_zero() const {
  for (const auto& [n, m] : blocks)
    if (!m.is_zero()) return false;
  return true;
}

std::optional<int> GradedOp::first_nonzero_block() const {
  for (const auto& [n, m] : blocks)
    if (!m.is_zero()) return n;
  return std::nullopt;
}

FVec GradedOp::flatten() const {
  FVec v;
  for (const auto& [n, m] : blocks) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

GradedOp GradedOp::restricted(int lo, int hi) const {
  GradedOp r{rank, {}};
  for (const auto& [n, m] : blocks)
    if (n >= lo && n <= hi) r.blocks.emplace(n, m);
  return r;
}

FVec GradedOp::apply(int n, const FVec& v) const {
  auto it = blocks.find(n);
  if (it == blocks.end()) throw std::out_of_range("degree outside the operator window");
  const FMatrix& m = it->second;
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("vector length does not match block");
  FVec out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero()) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

GradedOp compose(const GradedOp& a, const GradedOp& b) {
  GradedOp r{a.rank + b.rank, {}};
  for (const auto& [n, mb] : b.blocks) {
    const int t = n + b.rank;
    if (t < 0) {
      r.blocks.emplace(n, FMatrix(partition_count(n + r.rank), mb.cols()));
      continue;
    }
    auto it = a.blocks.find(t);
    if (it == a.blocks.end()) continue;
    r.blocks.emplace(n, matmul(it->second, mb));
  }
  return r;
}

GradedOp lincomb(const std::vector<std::pair<FieldElem, const GradedOp*>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  const int rank = terms[0].second->rank;
  for (const auto& [c, op] : terms)
    if (op->rank != rank) throw std::invalid_argument("adding operators of different rank");
  GradedOp r{rank, {}};
  for (const auto& [n, m0] : terms[0].second->blocks) {
    bool common = true;
    for (const auto& [c, op] : terms)
      if (!op->blocks.count(n)) common = false;
    if (!common) continue;
    FMatrix acc(m0.rows(), m0.cols());
    for (const auto& [c, op] : terms) {
      if (c.is_zero()) continue;
      const FMatrix& m = op->blocks.at(n);
      for (std::size_t i = 0; i < acc.data().size(); ++i) {
        if (m.data()[i].is_zero()) continue;
        acc.data()[i] += c.is_one() ? m.data()[i] : c * m.data()[i];
      }
    }
    r.blocks.emplace(n, std::move(acc));
  }
  return r;
}

GradedOp operator+(const GradedOp& a, const GradedOp& b) { return lincomb({{FieldElem(1), &a}, {FieldElem(1), &b}}); }

GradedOp operator-(const GradedOp& a, const GradedOp& b) { return lincomb({{FieldElem(1), &a}, {FieldElem(-1), &b}}); }

GradedOp operator*(const FieldElem& s, const GradedOp& a) { return lincomb({{s, &a}}); }

GradedOp commutator(const GradedOp& a, const GradedOp& b) {
  const GradedOp ab = compose(a, b);
  const GradedOp ba = compose(b, a);
  GradedOp r = ab - ba;
  if (r.empty()) throw std::runtime_error("truncation too small");
  return r;
}

// ---- OpContext --------------------------------------------------------------

OpContext::OpContext(std::shared_ptr<const JackTable> table, ContentConvention conv)
    : table_(std::move(table)), conv_(conv) {}

const GradedOp& OpContext::memo(std::map<Key, GradedOp>& cache, Key key, const std::function<GradedOp()>& make) {
  {
    const std::lock_guard<std::recursive_mutex> g(mu_);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  GradedOp op = make();
  const std::lock_guard<std::recursive_mutex> g(mu_);
  return cache.emplace(key, std::move(op)).first->second;
}

const GradedOp& OpContext::multiplication(int l) {
  if (l < 1 || l > max_degree()) throw std::out_of_range("multiplication index outside the truncation");
  return memo(mult_, {l, 0}, [&] {
    GradedOp op{l, {}};
    for (int n = 0; n + l <= max_degree(); ++n) {
      const auto& src = table_->partitions(n);
      FMatrix m(table_->dim(n + l), table_->dim(n));
      for (std::size_t j = 0; j < src.size(); ++j) {
        Partition p = src[j];
        p.insert(std::upper_bound(p.begin(), p.end(), l, std::greater<>()), l);
        m(table_->index(p), static_cast<int>(j)) = FieldElem(1);
      }
      op.blocks.emplace(n, std::move(m));
    }
    return op;
  });
}

const GradedOp& OpContext::sekiguchi(int l) {
  if (l < 1) throw std::out_of_range("Sekiguchi index must be positive");
  return memo(sek_, {l, 0}, [&] {
    GradedOp op{0, {}};
    const FieldElem k = kappa();
    for (int n = 0; n <= max_degree(); ++n) {
      const auto& parts = table_->partitions(n);
      FVec e(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) e[i] = content_power_sum(parts[i], l, k, conv_);
      op.blocks.emplace(n, matmul(scale_cols(table_->jack_in_p(n), e), table_->p_in_jack(n)));
    }
    return op;
  });
}

const GradedOp& OpContext::d_r0(int r) {
  return memo(dr0_, {r, 0}, [&] {
    const GradedOp& m = multiplication(r);
    if (conv_ == ContentConvention::standard || r % 2 == 1) return m;
    return FieldElem(-1) * m;
  });
}

const GradedOp& OpContext::d1(int k) {
  if (k < 0) throw std::out_of_range("negative generator index");
  return memo(d1_, {k, 0}, [&] { return commutator(sekiguchi(k + 1), d_r0(1)); });
}

const GradedOp& OpContext::drd(int r, int d) {
  if (r < 1 || d < 0) throw std::out_of_range("generator index out of range");
  return memo(drd_, {r, d}, [&] { return commutator(sekiguchi(d + 1), d_r0(r)); });
}

const GradedOp& OpContext::dprime(int r, int d) {
  if (r < 1 || d < 0) throw std::out_of_range("generator index out of range");
  if (d == 0) return d_r0(r);
  return memo(dprime_, {r, d}, [&] { return commutator(sekiguchi(2), dprime(r, d - 1)); });
}

const GradedOp& OpContext::lowering(int k) {
  return memo(low_, {k, 0}, [&] { return kappa() * adjoint(d1(k)); });
}

GradedOp OpContext::adjoint(const GradedOp& a) const {
  GradedOp r{-a.rank, {}};
  for (const auto& [n, m] : a.blocks) {
    const int t = n + a.rank;
    if (t < 0 || t > max_degree()) continue;
    const FVec& zs = table_->p_gram(n);
    const FVec& zt = table_->p_gram(t);
    FMatrix b(m.cols(), m.rows());
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (!m(j, i).is_zero()) b(i, j) = m(j, i) * zt[static_cast<std::size_t>(j)] / zs[static_cast<std::size_t>(i)];
    r.blocks.emplace(t, std::move(b));
  }
  // Sources whose image would have negative degree carry the empty map.
  for (int m = 0; m < -r.rank && m <= max_degree(); ++m)
    if (!r.blocks.count(m)) r.blocks.emplace(m, FMatrix(0, table_->dim(m)));
  return r;
}

FMatrix OpContext::in_jack_basis(const GradedOp& a, int n) const {
  return matmul(matmul(table_->p_in_jack(n + a.rank), a.blocks.at(n)), table_->jack_in_p(n));
}

// ---- filtration ---------------------------------------------------------------

namespace {

GradedOp standard_window(const GradedOp& op, int max_degree) {
  return op.restricted(std::max(0, -op.rank), max_degree - std::max(op.rank, 0));
}

}  // namespace

const std::vector<GradedOp>& Filtration::basis(int r, int d) {
  static const std::vector<GradedOp> none;
  if (d < 0 || r < 1) return none;
  const auto key = std::make_pair(r, d);
  if (auto it = basis_.find(key); it != basis_.end()) return it->second;

  const int n_max = ctx_.max_degree();
  std::vector<GradedOp> cand;
  if (r == 1) {
    for (int k = 0; k <= d; ++k) cand.push_back(standard_window(ctx_.d1(k), n_max));
  } else {
    for (const auto& op : basis(r, d - 1)) cand.push_back(op);
    for (int r1 = 1; r1 < r; ++r1) {
      for (int d1 = 0; d1 <= d; ++d1) {
        const auto& left = basis(r1, d1);
        const auto& right = basis(r - r1, d - d1);
        for (const auto& a : left)
          for (const auto& b : right) cand.push_back(standard_window(compose(a, b), n_max));
      }
    }
    for (int l = 0; l <= d + 1; ++l) {
      const GradedOp& g = ctx_.d1(l);
      for (const auto& x : basis(r - 1, d - l + 1)) cand.push_back(standard_window(commutator(g, x), n_max));
    }
  }
  std::vector<FVec> rows;
  rows.reserve(cand.size());
  for (const auto& op : cand) rows.push_back(op.flatten());
  candidates_[key] = cand.size();
  const CertifiedRank c = certified_rank(rows);
  const RankSample s = sample_with_rank(rows, c.rank);
  std::vector<GradedOp> chosen;
  for (int i : s.independent) chosen.push_back(std::move(cand[static_cast<std::size_t>(i)]));
  dim_[key] = c.rank;
  return basis_.emplace(key, std::move(chosen)).first->second;
}

int Filtration::dimension(int r, int d) {
  if (d < 0 || r < 1) return 0;
  basis(r, d);
  return dim_.at({r, d});
}

bool Filtration::contains(int r, int d, const GradedOp& op) {
  const auto& b = basis(r, d);
  const GradedOp w = standard_window(op, ctx_.max_degree());
  if (b.empty()) return w.is_zero();
  std::vector<FVec> rows;
  for (const auto& x : b) rows.push_back(x.flatten());
  rows.push_back(w.flatten());
  return certified_rank(rows).rank == static_cast<int>(b.size());
}

bool Filtration::window_limited(int r, int d) {
  const auto& b = basis(r, d);
  if (d < 0 || r < 1 || b.empty()) return false;
  return b.front().flatten().size() < candidates_.at({r, d});
}

long free_monomial_count(int r, int d) {
  if (r < 0 || d < 0) return 0;
  std::vector<std::vector<long>> ways(static_cast<std::size_t>(r) + 1, std::vector<long>(static_cast<std::size_t>(d) + 1, 0));
  ways[0][0] = 1;
  for (int gr = 1; gr <= r; ++gr) {
    for (int gd = 0; gd <= d; ++gd) {
      for (int R = gr; R <= r; ++R)
        for (int D = gd; D <= d; ++D) ways[static_cast<std::size_t>(R)][static_cast<std::size_t>(D)] += ways[static_cast<std::size_t>(R - gr)][static_cast<std::size_t>(D - gd)];
    }
  }
  return ways[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
}

}  // namespace wsh
