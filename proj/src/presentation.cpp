#include "wsh/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wsh/multipoly.hpp"

namespace wsh {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (const auto& l : w) os << "D[" << l.kind << "," << l.index << "]";
  return os.str();
}

FreeElement FreeElement::word(Word w, const FieldElem& c) {
  FreeElement x;
  x.add(w, c);
  return x;
}

FieldElem FreeElement::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? FieldElem() : it->second;
}

void FreeElement::add(const Word& w, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

FreeElement operator*(FreeElement a, const FieldElem& s) {
  if (s.is_zero()) return {};
  for (auto& [w, c] : a.t_) c *= s;
  return a;
}

std::string FreeElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << word_str(w);
  }
  return os.str();
}

FreeElement t0(int l) {
  if (l < 1) throw std::out_of_range("t_{0,l} needs l >= 1");
  return FreeElement::word({{0, l}});
}

FreeElement t1(int k) {
  if (k < 0) throw std::out_of_range("t_{1,k} needs k >= 0");
  return FreeElement::word({{1, k}});
}

FreeElement tlow(int k) {
  if (k < 0) throw std::out_of_range("t_{-1,k} needs k >= 0");
  return FreeElement::word({{-1, k}});
}

FreeElement bracket(const FreeElement& a, const FreeElement& b) { return a * b - b * a; }

FreeElement normal_order(const FreeElement& x, int kmax) {
  FreeElement done;
  std::map<Word, FieldElem> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    Word w = std::move(node.key());
    const FieldElem c = std::move(node.mapped());
    if (c.is_zero()) continue;
    for (const auto& l : w)
      if (l.kind == -1) throw std::invalid_argument("normal_order handles t_0 and t_1 letters only");
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i].kind == 0 && w[i + 1].kind == 1)) ++i;
    if (i + 1 >= w.size()) {
      auto first0 = std::find_if(w.begin(), w.end(), [](const Letter& l) { return l.kind == 0; });
      std::sort(first0, w.end());
      done.add(w, c);
      continue;
    }
    const int l = w[i].index, k = w[i + 1].index;
    if (k + l - 1 > kmax) throw std::out_of_range("index overflow; raise K");
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    Word merged = w;
    merged[i] = {1, k + l - 1};
    merged.erase(merged.begin() + static_cast<long>(i) + 1);
    for (Word* v : {&swapped, &merged}) {
      auto [it, fresh] = work.try_emplace(std::move(*v), c);
      if (!fresh) it->second += c;
    }
  }
  return done;
}

// ---- evaluation ---------------------------------------------------------------

const GradedOp& Evaluator::letter(const Letter& l) {
  switch (l.kind) {
    case 0:
      return ctx_.sekiguchi(l.index);
    case 1:
      return ctx_.d1(l.index);
    case -1:
      return ctx_.lowering(l.index);
  }
  throw std::invalid_argument("unknown generator kind");
}

const GradedOp& Evaluator::word(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  GradedOp op;
  if (w.empty()) {
    op.rank = 0;
    for (int n = 0; n <= ctx_.max_degree(); ++n) op.blocks.emplace(n, FMatrix::identity(ctx_.table().dim(n)));
  } else if (w.size() == 1) {
    op = letter(w[0]);
  } else {
    const Word tail(w.begin() + 1, w.end());
    op = compose(letter(w[0]), word(tail));
  }
  if (op.empty()) throw std::runtime_error("truncation too small");
  return cache_.emplace(w, std::move(op)).first->second;
}

GradedOp Evaluator::operator()(const FreeElement& x) {
  if (x.is_zero()) throw std::invalid_argument("evaluating the zero element needs a rank");
  std::vector<std::pair<FieldElem, const GradedOp*>> terms;
  for (const auto& [w, c] : x.terms()) terms.emplace_back(c, &word(w));
  GradedOp r = lincomb(terms);
  if (r.empty()) throw std::runtime_error("truncation too small");
  return r;
}

// ---- relation families --------------------------------------------------------

FreeElement rank2_relation(int k, int l, const FieldElem& kappa) {
  const FieldElem kk = kappa * (kappa - FieldElem(1));
  FreeElement r = FieldElem(3) * bracket(t1(l + 2), t1(k + 1)) - FieldElem(3) * bracket(t1(l + 1), t1(k + 2)) -
                  bracket(t1(l + 3), t1(k)) + bracket(t1(l), t1(k + 3)) + bracket(t1(l + 1), t1(k)) -
                  bracket(t1(l), t1(k + 1));
  r += kk * (t1(k) * t1(l) + t1(l) * t1(k) + bracket(t1(l + 1), t1(k)) - bracket(t1(l), t1(k + 1)));
  return r;
}

FreeElement cubic_relation(const FieldElem& kappa) {
  const FieldElem kk = kappa * (kappa - FieldElem(1));
  return FieldElem(3) * bracket(t1(2), t1(1)) - bracket(t1(3), t1(0)) + bracket(t1(1), t1(0)) +
         kk * (t1(0) * t1(0) + bracket(t1(1), t1(0)));
}

FreeElement serre_relation() { return bracket(t1(0), bracket(t1(0), t1(1))); }

FreeElement shift_relation(int l, int k) { return bracket(t0(l), t1(k)) - t1(k + l - 1); }

FreeElement commuting_relation(int l, int k) { return bracket(t0(l), t0(k)); }

FreeElement generating_coefficient(int m, int n, const FieldElem& kappa) {
  // k(z - w) with z = variable 0, w = variable 1
  const MultiPoly u = MultiPoly::variable(0) - MultiPoly::variable(1);
  const MultiPoly kz = (u - MultiPoly(1) + MultiPoly(kappa)) * (u + MultiPoly(1)) * (u - MultiPoly(kappa));
  FreeElement r;
  for (const auto& [e, c] : kz.terms()) {
    const int a = e.size() > 0 ? e[0] : 0;
    const int b = e.size() > 1 ? e[1] : 0;
    r += c * (t1(m + a) * t1(n + b) + t1(n + a) * t1(m + b));
  }
  return r;
}

FVec rank2_coordinates(const FreeElement& x, int kmax) {
  FVec v(static_cast<std::size_t>((kmax + 1) * (kmax + 1)));
  for (const auto& [w, c] : x.terms()) {
    if (w.size() != 2 || w[0].kind != 1 || w[1].kind != 1 || w[0].index > kmax || w[1].index > kmax) {
      throw std::out_of_range("word outside the rank-2 coordinate range: " + word_str(w));
    }
    v[static_cast<std::size_t>(w[0].index * (kmax + 1) + w[1].index)] = c;
  }
  return v;
}

namespace {

int exact_rank(const std::vector<FVec>& rows) {
  if (rows.empty()) return 0;
  FMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return static_cast<int>(rref(m).pivots.size());
}

}  // namespace

Rank2Match rank2_kernel_match(Evaluator& ev, int kmax) {
  Rank2Match out;
  out.kmax = kmax;
  OpContext& ctx = ev.context();
  const int n_max = ctx.max_degree();
  std::vector<FVec> images;
  for (int a = 0; a <= kmax; ++a)
    for (int b = 0; b <= kmax; ++b) images.push_back(ev.word({{1, a}, {1, b}}).restricted(0, n_max - 2).flatten());
  out.products = static_cast<int>(images.size());
  const CertifiedRank cr = certified_rank(images);
  out.operator_rank = cr.rank;
  out.kernel_dim = out.products - cr.rank;

  const FieldElem kappa = ctx.kappa();
  std::vector<FVec> rel;
  out.relations_vanish = true;
  for (int k = 0; k + 3 <= kmax; ++k)
    for (int l = 0; l + 3 <= kmax; ++l) {
      const FreeElement r = rank2_relation(k, l, kappa);
      if (!ev(r).is_zero()) out.relations_vanish = false;
      rel.push_back(rank2_coordinates(r, kmax));
    }
  out.relations = static_cast<int>(rel.size());
  out.relation_span_dim = exact_rank(rel);

  // Exact kernel: on pivot columns of a sample attaining the certified rank the
  // restricted matrix keeps full rank, so its left kernel is the kernel.
  const RankSample s = sample_with_rank(images, cr.rank);
  std::vector<FVec> restricted;
  for (const auto& row : images) {
    FVec r;
    for (int c : s.pivot_cols) r.push_back(row[static_cast<std::size_t>(c)]);
    restricted.push_back(std::move(r));
  }
  const std::vector<FVec> kernel = left_kernel(restricted);
  out.kernel_in_relation_span = static_cast<int>(kernel.size()) == out.kernel_dim;
  for (const auto& v : kernel) {
    std::vector<FVec> ext = rel;
    ext.push_back(v);
    if (exact_rank(ext) != out.relation_span_dim) out.kernel_in_relation_span = false;
  }
  return out;
}

}  // namespace wsh
