#include "wsh/shc.hpp"

#include <stdexcept>

namespace wsh {

const char* gconvention_name(GConvention g) { return g == GConvention::printed ? "printed" : "power"; }

std::vector<std::string> CentralRing::names() const {
  std::vector<std::string> n;
  for (int i = 0; i <= order; ++i) n.push_back("c" + std::to_string(i));
  for (int j = 1; j <= order + 1; ++j) n.push_back("d" + std::to_string(j));
  n.push_back("w");
  return n;
}

TruncSeries<FieldElem> g_series(int l, const FieldElem& a, int order, GConvention conv) {
  using S = TruncSeries<FieldElem>;
  const S x = S::linear(order, FieldElem(1), a);
  S g(order);
  if (l == 0) {
    g = series_log(x) * FieldElem(-1);
  } else {
    const int e = conv == GConvention::printed ? -1 : -l;
    g = (series_pow(x, e) - S::constant(order, FieldElem(1))) * FieldElem::rational(1, l);
  }
  return g.shifted(l);
}

TruncSeries<FieldElem> phi_series(int l, const FieldElem& kappa, int order, GConvention conv) {
  const FieldElem xi = FieldElem(1) - kappa;
  TruncSeries<FieldElem> s(order);
  for (const FieldElem& q : {FieldElem(1), -xi, -kappa}) s += g_series(l, -q, order, conv) - g_series(l, q, order, conv);
  return s;
}

namespace {

TruncSeries<MultiPoly> lift(const TruncSeries<FieldElem>& s, const MultiPoly& factor) {
  TruncSeries<MultiPoly> r(s.order());
  for (int i = 0; i <= s.order(); ++i)
    if (!s[i].is_zero()) r[i] = factor * s[i];
  return r;
}

}  // namespace

ESeries central_series(int order, GConvention conv, const Field& field) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  const FieldElem kappa = field.kappa();
  const FieldElem xi = FieldElem(1) - kappa;
  if (xi.is_zero()) throw UnluckySpecialization();
  const CentralRing ring{order};
  TruncSeries<MultiPoly> expo(order);
  for (int l = 0; l < order; ++l) {
    const MultiPoly cl = MultiPoly::variable(ring.c(l)) * FieldElem(l % 2 == 1 ? 1 : -1);
    expo += lift(g_series(l, xi, order, conv), cl);
    expo += lift(phi_series(l, kappa, order, conv), MultiPoly::variable(ring.d(l + 1)));
  }
  ESeries out{ring, conv, series_exp(expo), {}};
  const FieldElem inv = xi.inverse();
  for (int h = 0; h < order; ++h) out.e.push_back(out.series[h + 1] * inv);
  return out;
}

std::vector<MultiPoly> omega_preset(const ESeries& s, const FieldElem& kappa) {
  std::map<int, MultiPoly> sub;
  sub[s.ring.c(0)] = MultiPoly();
  const MultiPoly w = MultiPoly::variable(s.ring.omega());
  for (int i = 1; i <= s.ring.order; ++i) sub[s.ring.c(i)] = (MultiPoly(kappa) * w).pow(i) * FieldElem(-1);
  std::vector<MultiPoly> out;
  for (const auto& e : s.e) out.push_back(e.substitute(sub));
  return out;
}

std::vector<MultiPoly> on_partition(const ESeries& s, const Partition& lambda, const FieldElem& kappa,
                                    ContentConvention conv) {
  std::map<int, MultiPoly> sub;
  for (int j = 1; j <= s.ring.order + 1; ++j) sub[s.ring.d(j)] = MultiPoly(content_power_sum(lambda, j, kappa, conv));
  std::vector<MultiPoly> out;
  for (const auto& e : s.e) out.push_back(e.substitute(sub));
  return out;
}

// ---- operator side ------------------------------------------------------------

EOperatorCheck e_operator_check(OpContext& ctx, int h) {
  EOperatorCheck out;
  out.h = h;
  std::vector<GradedOp> ops;
  for (int k = 0; k <= h; ++k) ops.push_back(commutator(ctx.lowering(k), ctx.d1(h - k)));
  out.splits = static_cast<int>(ops.size());
  out.window = ops[0].window();
  out.split_independent = true;
  for (std::size_t i = 1; i < ops.size(); ++i)
    if (!(ops[i] - ops[0]).is_zero()) out.split_independent = false;
  out.diagonal = true;
  for (const auto& [n, m] : ops[0].blocks) {
    const FMatrix d = ctx.in_jack_basis(ops[0], n);
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        if (i != j && !d(i, j).is_zero()) out.diagonal = false;
  }
  return out;
}

namespace {

FieldElem eigenvalue(OpContext& ctx, const GradedOp& op, const Partition& lambda) {
  const int n = partition_size(lambda);
  if (!op.blocks.count(n)) throw std::out_of_range("partition outside the measurement window");
  const int i = ctx.table().index(lambda);
  return ctx.in_jack_basis(op, n)(i, i);
}

// a c_h + b after substituting every other variable; throws if not affine in c_h.
std::pair<FieldElem, FieldElem> affine_in(const MultiPoly& p, int var) {
  FieldElem a, b;
  for (const auto& [e, c] : p.terms()) {
    int deg = 0, other = 0;
    for (std::size_t i = 0; i < e.size(); ++i) (static_cast<int>(i) == var ? deg : other) += e[i];
    if (other != 0 || deg > 1) throw std::logic_error("prediction is not affine in the unknown");
    (deg == 1 ? a : b) += c;
  }
  return {a, b};
}

}  // namespace

FieldElem measured_e(OpContext& ctx, int h, const Partition& lambda) {
  return eigenvalue(ctx, commutator(ctx.lowering(0), ctx.d1(h)), lambda);
}

FitResult fit_central_charge(OpContext& ctx, const ESeries& s, const FitProtocol& pr) {
  FitResult out;
  out.convention = s.convention;
  out.realization = ctx.convention();
  if (pr.hmax >= s.ring.order) throw std::invalid_argument("series order too small for the fit");
  const FieldElem kappa = ctx.kappa();
  const int n_max = ctx.max_degree();
  std::vector<GradedOp> ops;
  for (int h = 0; h <= pr.hmax; ++h) ops.push_back(commutator(ctx.lowering(0), ctx.d1(h)));
  std::map<Partition, std::vector<MultiPoly>> pred_cache;
  auto predicted = [&](const Partition& lam, int h) -> const MultiPoly& {
    auto it = pred_cache.find(lam);
    if (it == pred_cache.end()) it = pred_cache.emplace(lam, on_partition(s, lam, kappa, ctx.convention())).first;
    return it->second[static_cast<std::size_t>(h)];
  };
  auto substitute_known = [&](const MultiPoly& p, int h) {
    std::map<int, MultiPoly> sub;
    for (int j = 0; j <= s.ring.order; ++j)
      if (j != h) sub[s.ring.c(j)] = j < h ? MultiPoly(out.c[static_cast<std::size_t>(j)]) : MultiPoly();
    return p.substitute(sub);
  };

  out.trained = true;
  for (int h = 0; h <= pr.hmax && out.trained; ++h) {
    std::vector<Partition> train{{}};
    if (h <= pr.train_h)
      for (int n = 1; n <= pr.train_size && n + 1 <= n_max; ++n)
        for (const auto& p : partitions_of(n)) train.push_back(p);
    std::vector<std::pair<FieldElem, FieldElem>> lhs;
    std::vector<FieldElem> rhs;
    for (const auto& lam : train) {
      lhs.push_back(affine_in(substitute_known(predicted(lam, h), h), s.ring.c(h)));
      rhs.push_back(eigenvalue(ctx, ops[static_cast<std::size_t>(h)], lam));
    }
    out.training_equations += static_cast<int>(train.size());
    std::optional<FieldElem> ch;
    for (std::size_t i = 0; i < lhs.size() && !ch; ++i)
      if (!lhs[i].first.is_zero()) ch = (rhs[i] - lhs[i].second) / lhs[i].first;
    if (!ch) {
      out.trained = false;
      out.message = "c" + std::to_string(h) + " is not determined by the training set";
      break;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i].first * *ch + lhs[i].second != rhs[i]) out.trained = false;
    out.c.push_back(*ch);
    if (!out.trained) out.message = std::string("no central character fits under convention ") + gconvention_name(s.convention);
  }
  if (!out.trained) return out;

  for (int h = pr.test_h_lo; h <= pr.hmax; ++h)
    for (int n = pr.test_size_lo; n <= pr.test_size_hi && n + 1 <= n_max; ++n)
      for (const auto& lam : partitions_of(n)) {
        std::map<int, MultiPoly> sub;
        for (int j = 0; j <= s.ring.order; ++j)
          sub[s.ring.c(j)] = j <= pr.hmax ? MultiPoly(out.c[static_cast<std::size_t>(j)]) : MultiPoly();
        const MultiPoly p = predicted(lam, h).substitute(sub);
        const FieldElem want = eigenvalue(ctx, ops[static_cast<std::size_t>(h)], lam);
        ++out.test_equations;
        if (p != MultiPoly(want)) ++out.test_mismatches;
      }
  out.tested = out.test_equations > 0 && out.test_mismatches == 0;
  out.message = out.tested ? "fit reproduces the test set"
                           : std::to_string(out.test_mismatches) + " test eigenvalues disagree";
  return out;
}

// ---- negative-half relations ----------------------------------------------------

FreeElement lowering_cubic_base(const FieldElem& kappa) {
  const FieldElem kk = kappa * (kappa - FieldElem(1));
  return FieldElem(3) * bracket(tlow(2), tlow(1)) - bracket(tlow(3), tlow(0)) + bracket(tlow(1), tlow(0)) +
         kk * bracket(tlow(1), tlow(0));
}

const char* reading_name(QuadraticReading r) {
  switch (r) {
    case QuadraticReading::printed_raising:
      return "-D[1,0]^2";
    case QuadraticReading::lowering_plus:
      return "+D[-1,0]^2";
    case QuadraticReading::lowering_minus:
      return "-D[-1,0]^2";
  }
  return "?";
}

std::optional<FreeElement> lowering_cubic(QuadraticReading r, const FieldElem& kappa) {
  const FieldElem kk = kappa * (kappa - FieldElem(1));
  switch (r) {
    case QuadraticReading::printed_raising:
      return std::nullopt;
    case QuadraticReading::lowering_plus:
      return lowering_cubic_base(kappa) + kk * (tlow(0) * tlow(0));
    case QuadraticReading::lowering_minus:
      return lowering_cubic_base(kappa) - kk * (tlow(0) * tlow(0));
  }
  return std::nullopt;
}

FreeElement lowering_serre() { return bracket(tlow(0), bracket(tlow(0), tlow(1))); }

FreeElement formal_adjoint(const FreeElement& x, const FieldElem& kappa) {
  FreeElement out;
  const FieldElem inv = kappa.inverse();
  for (const auto& [w, c] : x.terms()) {
    Word r(w.rbegin(), w.rend());
    FieldElem s = c;
    for (auto& l : r) {
      if (l.kind == 1) {
        l.kind = -1;
        s *= inv;
      } else if (l.kind == -1) {
        l.kind = 1;
        s *= kappa;
      }
    }
    out.add(r, s);
  }
  return out;
}

}  // namespace wsh
