#include "wsh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace wsh {

using nlohmann::ordered_json;

void validate(const Config& cfg) {
  if (cfg.max_degree < 2) throw std::invalid_argument("max-degree must be at least 2");
  if (cfg.kmax < 3 || cfg.lmax < 3) throw std::invalid_argument("kmax and lmax must be at least 3");
  if (cfg.series_order < 2) throw std::invalid_argument("series-order must be at least 2");
  if (cfg.jobs < 0) throw std::invalid_argument("jobs must be nonnegative");
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::pair<int, int> rank_window(int rank, int max_degree) {
  return {std::max(0, -rank), max_degree - std::max(0, rank)};
}

// ---- report -------------------------------------------------------------------

bool Report::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  ordered_json cfg;
  cfg["max_degree"] = config.max_degree;
  cfg["kmax"] = config.kmax;
  cfg["lmax"] = config.lmax;
  cfg["series_order"] = config.series_order;
  cfg["mode"] = config.specialize ? "specialized" : "exact";
  if (config.specialize) cfg["kappa"] = config.specialize->get_str();
  j["config"] = cfg;
  int counts[3] = {0, 0, 0};
  for (const auto& c : checks) ++counts[static_cast<int>(c.status)];
  j["status"] = pass() ? "pass" : "fail";
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json o;
    o["id"] = c.id;
    o["formula"] = c.formula;
    o["window"] = {c.window.first, c.window.second};
    o["status"] = status_name(c.status);
    if (c.first_failing_block) o["first_failing_block"] = *c.first_failing_block;
    if (!c.note.empty()) o["note"] = c.note;
    if (!c.witness.is_null()) o["witness"] = c.witness;
    arr.push_back(std::move(o));
  }
  j["checks"] = std::move(arr);
  if (wall_time) j["wall_time"] = *wall_time;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string st = status_name(c.status);
    st.resize(8, ' ');
    os << st << c.id << "  [" << c.window.first << ',' << c.window.second << ']';
    if (c.first_failing_block) os << "  first failing block " << *c.first_failing_block;
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
  int fails = 0, skips = 0;
  for (const auto& c : checks) {
    fails += c.status == Status::fail;
    skips += c.status == Status::skipped;
  }
  os << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, " << fails << " failed, "
     << skips << " skipped)\n";
  if (wall_time) os << "wall time " << *wall_time << " s\n";
  return os.str();
}

// ---- workbench ----------------------------------------------------------------------

Workbench::Workbench(Config cfg)
    : cfg_(std::move(cfg)), field_(cfg_.specialize ? Field(*cfg_.specialize) : Field()) {}

std::shared_ptr<const JackTable> Workbench::table() {
  if (!table_) table_ = std::make_shared<const JackTable>(field_, cfg_.max_degree);
  return table_;
}

OpContext& Workbench::ctx(ContentConvention conv) {
  auto& p = ctx_[conv];
  if (!p) p = std::make_unique<OpContext>(table(), conv);
  return *p;
}

Evaluator& Workbench::ev(ContentConvention conv) {
  auto& p = ev_[conv];
  if (!p) p = std::make_unique<Evaluator>(ctx(conv));
  return *p;
}

namespace {

bool window_empty_error(const std::exception& e) { return std::string(e.what()) == "truncation too small"; }

Check skipped(std::string id, std::string formula, std::pair<int, int> w, std::string why = "skipped: window empty") {
  Check c;
  c.id = std::move(id);
  c.formula = std::move(formula);
  c.window = w;
  c.status = Status::skipped;
  c.note = std::move(why);
  return c;
}

// The operator built by make must vanish on its window.
Check zero_check(std::string id, std::string formula, int rank, int n_max, const std::function<GradedOp()>& make) {
  const auto w = rank_window(rank, n_max);
  if (w.first > w.second) return skipped(std::move(id), std::move(formula), w);
  Check c;
  c.id = std::move(id);
  c.formula = std::move(formula);
  try {
    const GradedOp op = make();
    c.window = op.window();
    c.first_failing_block = op.first_nonzero_block();
    c.status = c.first_failing_block ? Status::fail : Status::pass;
  } catch (const UnluckySpecialization&) {
    throw;
  } catch (const std::runtime_error& e) {
    if (!window_empty_error(e)) throw;
    return skipped(std::move(c.id), std::move(c.formula), w);
  }
  return c;
}

Check verdict(std::string id, std::string formula, std::pair<int, int> window, bool ok, ordered_json witness = {},
              std::string note = {}) {
  Check c;
  c.id = std::move(id);
  c.formula = std::move(formula);
  c.window = window;
  c.status = ok ? Status::pass : Status::fail;
  c.witness = std::move(witness);
  c.note = std::move(note);
  return c;
}

// Certified rank of the words t[1,a] t[1,b], a, b <= kmax, on source degrees [0, hi].
int rank2_word_rank(Evaluator& e, int kmax, int hi) {
  std::vector<FVec> rows;
  for (int a = 0; a <= kmax; ++a)
    for (int b = 0; b <= kmax; ++b) rows.push_back(e.word({{1, a}, {1, b}}).restricted(0, hi).flatten());
  return certified_rank(rows).rank;
}

// A rank that does not change when the window loses its top degree is taken as converged.
bool rank_stable(Evaluator& e, int kmax, int n_max, int rank) {
  return n_max - 3 >= 0 && rank2_word_rank(e, kmax, n_max - 3) == rank;
}

const char* kLimited = "skipped: window-limited; increase N";

std::string ij(const char* a, int x, const char* b, int y) {
  return std::string(a) + std::to_string(x) + b + std::to_string(y);
}

}  // namespace

// ---- positive half ------------------------------------------------------------------

std::vector<Check> positive_suite(Workbench& wb) {
  const Config& cfg = wb.config();
  const int N = cfg.max_degree, K = cfg.kmax, L = cfg.lmax;
  const FieldElem kappa = wb.kappa();
  OpContext& c = wb.ctx(ContentConvention::swapped);
  Evaluator& e = wb.ev(ContentConvention::swapped);
  std::vector<Check> out;

  for (int l = 1; l <= L; ++l)
    for (int k = l + 1; k <= L; ++k)
      out.push_back(zero_check(ij("positive.commute.l", l, ".k", k), "[D[0,l], D[0,k]] = 0", 0, N,
                               [&] { return commutator(c.sekiguchi(l), c.sekiguchi(k)); }));
  for (int l = 1; l <= L; ++l)
    for (int k = 0; k < K; ++k)
      out.push_back(zero_check(ij("positive.shift.l", l, ".k", k), "[D[0,l], D[1,k]] = D[1,k+l-1]", 1, N,
                               [&] { return e(shift_relation(l, k)); }));
  out.push_back(zero_check("positive.cubic",
                           "3[D[1,2],D[1,1]] - [D[1,3],D[1,0]] + [D[1,1],D[1,0]] + k(k-1)(D[1,0]^2 + [D[1,1],D[1,0]]) = 0",
                           2, N, [&] { return e(cubic_relation(kappa)); }));
  out.push_back(zero_check("positive.serre", "[D[1,0], [D[1,0], D[1,1]]] = 0", 3, N, [&] { return e(serre_relation()); }));
  for (int k = 0; k + 3 <= K; ++k)
    for (int l = 0; l + 3 <= K; ++l)
      out.push_back(zero_check(ij("positive.rank2.k", k, ".l", l),
                               "3[D[1,l+2],D[1,k+1]] - 3[D[1,l+1],D[1,k+2]] - [D[1,l+3],D[1,k]] + [D[1,l],D[1,k+3]] + "
                               "[D[1,l+1],D[1,k]] - [D[1,l],D[1,k+1]] + k(k-1)(D[1,k]D[1,l] + D[1,l]D[1,k] + "
                               "[D[1,l+1],D[1,k]] - [D[1,l],D[1,k+1]]) = 0",
                               2, N, [&] { return e(rank2_relation(k, l, kappa)); }));

  // D[0,l] J = (sum of content powers) J, applied to the Gram-Schmidt Jack vectors.
  for (int l = 1; l < L; ++l) {
    Check ch = verdict("positive.spectrum.l" + std::to_string(l), "D[0,l] J_lambda = sum_s c(s)^(l-1) J_lambda",
                       {0, N}, true);
    const GradedOp& d = c.sekiguchi(l);
    for (int n = 0; n <= N && !ch.first_failing_block; ++n) {
      const FMatrix& j = c.table().jack_in_p(n);
      const auto& parts = c.table().partitions(n);
      for (int col = 0; col < j.cols(); ++col) {
        FVec v(static_cast<std::size_t>(j.rows()));
        for (int r = 0; r < j.rows(); ++r) v[static_cast<std::size_t>(r)] = j(r, col);
        const FieldElem ev = content_power_sum(parts[static_cast<std::size_t>(col)], l, kappa, c.convention());
        const FVec w = d.apply(n, v);
        bool ok = true;
        for (std::size_t r = 0; r < v.size(); ++r) ok = ok && w[r] == v[r] * ev;
        if (!ok) {
          ch.status = Status::fail;
          ch.first_failing_block = n;
          break;
        }
      }
    }
    out.push_back(std::move(ch));
  }

  for (int l = 2; l <= L; ++l)
    out.push_back(zero_check("positive.recursion.l" + std::to_string(l), "(l-1) D[l,0] = [D[1,1], D[l-1,0]]", l, N,
                             [&] { return FieldElem(l - 1) * c.d_r0(l) - commutator(c.d1(1), c.d_r0(l - 1)); }));
  for (int k = 1; k <= L; ++k)
    for (int l = 1; k + l <= L; ++l)
      out.push_back(zero_check(ij("positive.kl_identity.k", k, ".l", l), "[D[k,1], D[l,0]] = k l D[k+l,0]", k + l, N, [&] {
        return commutator(c.drd(k, 1), c.d_r0(l)) - FieldElem(static_cast<long>(k) * l) * c.d_r0(k + l);
      }));

  Filtration f(c);
  for (int r = 1; r <= 3; ++r) {
    const auto w = rank_window(r, N);
    for (int d = 0; d <= 2; ++d) {
      const std::string lead_id = ij("positive.leading_term.r", r, ".d", d);
      const std::string pbw_id = ij("positive.pbw.r", r, ".d", d);
      const char* lead_formula = "D'[r,d] - r^(d-1) D[r,d] lies in F[r, <= d-1]";
      const char* pbw_formula = "dim F[r,<=d] - dim F[r,<=d-1] = #monomials of rank r and order d";
      if (w.first > w.second) {
        out.push_back(skipped(lead_id, lead_formula, w));
        out.push_back(skipped(pbw_id, pbw_formula, w));
        continue;
      }
      const FieldElem scale = d == 0 ? FieldElem::rational(1, r) : FieldElem(r).pow(d - 1);
      const GradedOp diff = c.dprime(r, d) - scale * c.drd(r, d);
      const bool in_span = d == 0 ? diff.is_zero() : f.contains(r, d - 1, diff);
      out.push_back(verdict(lead_id, lead_formula, w, in_span, {{"span_dim", f.dimension(r, d - 1)}}));

      const int gr = f.dimension(r, d) - f.dimension(r, d - 1);
      const long want = free_monomial_count(r, d);
      const bool limited = f.window_limited(r, d);
      Check pbw = verdict(pbw_id, pbw_formula, w, gr == want,
                          {{"graded_dim", gr}, {"monomials", want}, {"window_limited", limited}},
                          limited ? "window-limited; increase N" : "");
      // too few coordinates can only lower the measured dimension, so a mismatch is inconclusive
      if (limited && gr != want) {
        pbw.status = Status::skipped;
        pbw.note = kLimited;
      }
      out.push_back(std::move(pbw));
    }
  }
  return out;
}

// ---- presentation --------------------------------------------------------------------

std::vector<Check> presentation_suite(Workbench& wb) {
  const Config& cfg = wb.config();
  const int N = cfg.max_degree, K = cfg.kmax;
  Evaluator& e = wb.ev(ContentConvention::swapped);
  std::vector<Check> out;

  {
    // Random words with one or two t_1 letters and up to two t_0 letters; indices keep k + l - 1 <= 4.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ones(1, 2), zeros(0, 2), i0(1, 2), i1(0, 2), coef(-3, 3), pos(0, 3);
    bool sound = true, idempotent = true;
    int samples = 0;
    for (int t = 0; t < 12; ++t) {
      const int m = ones(rng);
      FreeElement x;
      for (int term = 0; term < 3; ++term) {
        Word w;
        for (int i = 0; i < m; ++i) w.push_back({1, i1(rng)});
        const int z = zeros(rng);
        for (int i = 0; i < z; ++i) {
          const auto at = w.begin() + std::min<int>(pos(rng), static_cast<int>(w.size()));
          w.insert(at, Letter{0, i0(rng)});
        }
        const int cf = coef(rng);
        if (cf != 0) x.add(w, FieldElem(cf));
      }
      if (x.is_zero()) continue;
      const auto w = rank_window(m, N);
      if (w.first > w.second) continue;
      const FreeElement y = normal_order(x, K);
      ++samples;
      if (!(e(x) - e(y)).is_zero()) sound = false;
      if (!(normal_order(y, K) == y)) idempotent = false;
    }
    out.push_back(verdict("presentation.normal_order", "phi(normal_order(x)) = phi(x), normal_order idempotent",
                          rank_window(2, N), sound && idempotent && samples > 0,
                          {{"samples", samples}, {"sound", sound}, {"idempotent", idempotent}}));
  }

  {
    const auto w = rank_window(2, N);
    const Rank2Match m = rank2_kernel_match(e, K);
    const bool stable = rank_stable(e, K, N, m.operator_rank);
    Check ch = verdict("presentation.rank2_kernel",
                          "ker(t[1,a] t[1,b] -> D[1,a] D[1,b], a,b <= K) = span of the rank-2 relations", w, m.match(),
                          {{"kmax", m.kmax},
                           {"products", m.products},
                           {"operator_rank", m.operator_rank},
                           {"kernel_dim", m.kernel_dim},
                           {"relations", m.relations},
                           {"relation_span_dim", m.relation_span_dim},
                           {"relations_vanish", m.relations_vanish},
                           {"kernel_in_relation_span", m.kernel_in_relation_span},
                           {"window_stable", stable}});
    if (!m.match() && !stable) {
      ch.status = Status::skipped;
      ch.note = kLimited;
    }
    out.push_back(std::move(ch));
  }
  return out;
}

// ---- shuffle ----------------------------------------------------------------------------

std::vector<Check> shuffle_suite(Workbench& wb) {
  const Config& cfg = wb.config();
  const int N = cfg.max_degree, K = cfg.kmax;
  const FieldElem kappa = wb.kappa();
  Evaluator& e = wb.ev(ContentConvention::swapped);
  std::vector<Check> out;
  auto z = [](int k) { return ShuffleElem::power(k); };
  auto star = [&](const ShuffleElem& a, const ShuffleElem& b) { return star_product(a, b, kappa); };

  {
    static constexpr int shapes[4][3] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 3);
    int failures = 0;
    for (int t = 0; t < 20; ++t) {
      const auto& s = shapes[pick(rng)];
      const ShuffleElem p = random_shuffle_elem(s[0], 2, rng(), kappa);
      const ShuffleElem q = random_shuffle_elem(s[1], 2, rng(), kappa);
      const ShuffleElem r = random_shuffle_elem(s[2], 2, rng(), kappa);
      if (!(star(star(p, q), r) == star(p, star(q, r)))) ++failures;
    }
    out.push_back(verdict("shuffle.associativity", "(P*Q)*R = P*(Q*R) on 20 random triples", {3, 4}, failures == 0,
                          {{"triples", 20}, {"failures", failures}}));
  }
  {
    const ShuffleElem p = random_shuffle_elem(2, 3, 5, kappa);
    const bool ok = star(ShuffleElem::unit(), p) == p && star(p, ShuffleElem::unit()) == p;
    out.push_back(verdict("shuffle.unit", "1*P = P = P*1", {2, 2}, ok));
  }
  {
    const MultiPoly d = MultiPoly::variable(0) - MultiPoly::variable(1);
    const FieldElem xi = FieldElem(1) - kappa;
    const MultiPoly want = d * d * FieldElem(2) - MultiPoly((kappa + xi * xi) * FieldElem(2));
    out.push_back(verdict("shuffle.z0z0", "z^0*z^0 = 2(z1-z2)^2 - 2(k+(1-k)^2)", {2, 2}, star(z(0), z(0)).poly() == want));
  }
  {
    const MultiPoly u = MultiPoly::variable(0);
    const FieldElem xi = FieldElem(1) - kappa;
    const MultiPoly h = kernel_h(kappa), kk = kernel_k(kappa);
    const bool neg = kk + h.substitute({{0, -u}}) == MultiPoly();
    const bool expanded = h == u * u * u - u * (kappa + xi * xi) - MultiPoly(kappa * xi);
    const bool at0 = kk.coeff({}) == kappa * xi;
    out.push_back(verdict("shuffle.kernel_function",
                          "k(u) = -h(-u), h(u) = u^3 - (k+(1-k)^2)u - k(1-k), k(0) = k(1-k)", {0, 3},
                          neg && expanded && at0, {{"k_is_minus_h_of_minus_u", neg}, {"h_expanded", expanded}, {"k_at_0", at0}}));
  }
  {
    auto br = [&](int a, int b) {
      return ShuffleElem(2, star(z(a), z(b)).poly() - star(z(b), z(a)).poly());
    };
    const FieldElem kk = kappa * (kappa - FieldElem(1));
    const MultiPoly rel = br(2, 1).poly() * FieldElem(3) - br(3, 0).poly() + br(1, 0).poly() +
                          (star(z(0), z(0)).poly() + br(1, 0).poly()) * kk;
    out.push_back(verdict("shuffle.cubic",
                          "3[z^2,z^1] - [z^3,z^0] + [z^1,z^0] + k(k-1)(z^0*z^0 + [z^1,z^0]) = 0 in the shuffle algebra",
                          {2, 2}, rel.is_zero()));
  }
  {
    // Coefficients of k(z-w)D(z)D(w) + k(w-z)D(w)D(z) outside the closed-form index range.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> idx(0, K - 1);
    std::vector<std::pair<int, int>> picked;
    while (picked.size() < 3) {
      const std::pair<int, int> mn{idx(rng), idx(rng)};
      if (std::max(mn.first, mn.second) + 3 <= K) continue;
      if (std::find(picked.begin(), picked.end(), mn) != picked.end()) continue;
      picked.push_back(mn);
    }
    std::sort(picked.begin(), picked.end());
    for (const auto& [m, n] : picked)
      out.push_back(zero_check(ij("shuffle.generating.m", m, ".n", n),
                               "[z^-m w^-n] (k(z-w)D(z)D(w) + k(w-z)D(w)D(z)) = 0", 2, N,
                               [&, m = m, n = n] { return e(generating_coefficient(m, n, kappa)); }));
  }
  {
    const int k4 = K - 1;
    const ShuffleKernelReport r = rank2_kernel_compare(e, k4);
    const bool stable = rank_stable(e, k4, N, r.operator_rank);
    Check ch = verdict("shuffle.rank2_kernel",
                          "ker(a -> sum a_kl z^k*z^l) = ker(a -> sum a_kl D[1,k]D[1,l]), kernel vectors divisible by h(z2-z1)",
                          rank_window(2, N), r.match(),
                          {{"kmax", r.kmax},
                           {"products", r.products},
                           {"shuffle_kernel_dim", r.shuffle_kernel_dim},
                           {"operator_rank", r.operator_rank},
                           {"operator_kernel_dim", r.operator_kernel_dim},
                           {"shuffle_kernel_in_operator_kernel", r.shuffle_kernel_in_operator_kernel},
                           {"divisible", r.divisible},
                           {"window_stable", stable}});
    if (!r.match() && !stable) {
      ch.status = Status::skipped;
      ch.note = kLimited;
    }
    out.push_back(std::move(ch));
  }
  {
    const char* formula = "dim span{z^a*z^b*z^c} = dim span{D[1,a]D[1,b]D[1,c]}, a,b,c <= 3";
    if (N < 12) {
      out.push_back(skipped("shuffle.rank3_span", formula, rank_window(3, N), "skipped: needs max-degree >= 12"));
    } else {
      std::vector<MultiPoly> prods;
      std::vector<FVec> images;
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
          for (int cc = 0; cc <= 3; ++cc) {
            prods.push_back(star(star(z(a), z(b)), z(cc)).poly());
            images.push_back(e.word({{1, a}, {1, b}, {1, cc}}).restricted(0, N - 3).flatten());
          }
      std::map<Exponent, int> cols;
      for (const auto& p : prods)
        for (const auto& [ex, cf] : p.terms()) cols.emplace(ex, 0);
      int idx = 0;
      for (auto& [ex, i] : cols) i = idx++;
      std::vector<FVec> rows;
      for (const auto& p : prods) {
        FVec v(cols.size());
        for (const auto& [ex, cf] : p.terms()) v[static_cast<std::size_t>(cols.at(ex))] = cf;
        rows.push_back(std::move(v));
      }
      const int rs = certified_rank(rows).rank, ro = certified_rank(images).rank;
      out.push_back(verdict("shuffle.rank3_span", formula, rank_window(3, N), rs == ro,
                            {{"shuffle_rank", rs}, {"operator_rank", ro}}));
    }
  }
  return out;
}

// ---- Fock space --------------------------------------------------------------------------

std::vector<Check> fock_suite(Workbench& wb) {
  const Config& cfg = wb.config();
  const int N = cfg.max_degree, K = cfg.kmax, L = cfg.lmax, M = cfg.series_order;
  const FieldElem kappa = wb.kappa();
  std::vector<Check> out;

  for (ContentConvention conv : {ContentConvention::standard, ContentConvention::swapped}) {
    const std::string pre = std::string("fock.") + convention_name(conv) + ".";
    OpContext& c = wb.ctx(conv);
    Evaluator& e = wb.ev(conv);

    for (int l = 1; l <= L; ++l)
      for (int k = 0; k + l - 1 <= K; ++k)
        out.push_back(zero_check(pre + ij("shift.l", l, ".k", k), "[D[0,l], D[-1,k]] = -D[-1,k+l-1]", -1, N,
                                 [&] { return e(bracket(t0(l), tlow(k)) + tlow(k + l - 1)); }));

    for (int h = 0; h <= std::min(4, K - 1); ++h) {
      const std::string id = pre + "e_operator.h" + std::to_string(h);
      const char* formula = "[D[-1,k], D[1,h-k]] independent of k and diagonal on Jacks";
      try {
        const EOperatorCheck r = e_operator_check(c, h);
        out.push_back(verdict(id, formula, r.window, r.split_independent && r.diagonal,
                              {{"splits", r.splits}, {"split_independent", r.split_independent}, {"diagonal", r.diagonal}}));
      } catch (const std::runtime_error& ex) {
        if (!window_empty_error(ex)) throw;
        out.push_back(skipped(id, formula, {0, N - 1}));
      }
    }

    out.push_back(zero_check(pre + "lowering_serre", "[D[-1,0], [D[-1,0], D[-1,1]]] = 0", -3, N,
                             [&] { return e(lowering_serre()); }));

    {
      const std::string id = pre + "lowering_cubic";
      const char* formula = "3[D[-1,2],D[-1,1]] - [D[-1,3],D[-1,0]] + [D[-1,1],D[-1,0]] + k(k-1)(X + [D[-1,1],D[-1,0]]) = 0 "
                            "for exactly one reading of X";
      const auto w = rank_window(-2, N);
      if (w.first > w.second) {
        out.push_back(skipped(id, formula, w));
      } else {
        ordered_json readings = ordered_json::object();
        int vanishing = 0;
        std::string which;
        for (QuadraticReading r :
             {QuadraticReading::printed_raising, QuadraticReading::lowering_plus, QuadraticReading::lowering_minus}) {
          const auto x = lowering_cubic(r, kappa);
          std::string verdict_str = "mixed rank";
          if (x) {
            const bool zero = e(*x).is_zero();
            verdict_str = zero ? "vanishes" : "nonzero";
            if (zero) {
              ++vanishing;
              which = reading_name(r);
            }
          }
          readings[reading_name(r)] = verdict_str;
        }
        out.push_back(verdict(id, formula, w, vanishing == 1, {{"readings", readings}},
                              vanishing == 1 ? "X = " + which : ""));
      }
    }

    {
      const std::string id = pre + "adjoint_consistency";
      const char* formula = "a raising relation vanishes => its formal adjoint vanishes";
      std::vector<std::pair<std::string, FreeElement>> rel{{"cubic", cubic_relation(kappa)}, {"serre", serre_relation()}};
      for (int k = 0; k + 3 <= K; ++k)
        for (int l = 0; l + 3 <= K; ++l) rel.emplace_back(ij("rank2.k", k, ".l", l), rank2_relation(k, l, kappa));
      int holding = 0;
      bool ok = true;
      ordered_json j = ordered_json::object();
      for (const auto& [name, x] : rel) {
        if (!e(x).is_zero()) {
          j[name] = "relation nonzero";
          continue;
        }
        ++holding;
        const bool adj = e(formal_adjoint(x, kappa)).is_zero();
        ok = ok && adj;
        j[name] = adj ? "adjoint vanishes" : "adjoint nonzero";
      }
      out.push_back(verdict(id, formula, rank_window(-2, N), ok && holding > 0, {{"relations", j}}));
    }
  }

  {
    bool ok = true;
    for (GConvention g : {GConvention::printed, GConvention::power}) {
      const ESeries s = central_series(M, g, wb.field());
      ok = ok && s.e[0] == MultiPoly::variable(s.ring.c(0));
    }
    out.push_back(verdict("fock.e0", "E_0 = c_0 in every convention", {0, 0}, ok));
  }
  {
    const ESeries s = central_series(M, GConvention::power, wb.field());
    bool ok = true;
    for (const auto& p : omega_preset(s, kappa))
      for (const auto& [ex, cf] : p.terms())
        for (int i = 0; i <= s.ring.order && i < static_cast<int>(ex.size()); ++i) ok = ok && ex[static_cast<std::size_t>(i)] == 0;
    out.push_back(verdict("fock.omega_preset", "c_0 = 0, c_i = -k^i w^i leaves E_l polynomial in w and the d's",
                          {0, M - 1}, ok));
  }
  {
    FitProtocol pr;
    pr.hmax = std::min({pr.hmax, M - 1, K - 1});
    const char* formula = "E_h on J_lambda fitted on |lambda| <= 2, h <= 1, then reproduced on |lambda| in [3,4], h >= 2";
    const std::pair<int, int> w{pr.test_size_lo, std::min(pr.test_size_hi, N - 1)};
    if (w.first > w.second || pr.hmax < pr.test_h_lo) {
      out.push_back(skipped("fock.central_fit", formula, w));
    } else {
      ordered_json runs = ordered_json::array();
      int passing = 0;
      std::string winner;
      for (ContentConvention conv : {ContentConvention::standard, ContentConvention::swapped})
        for (GConvention g : {GConvention::printed, GConvention::power}) {
          const ESeries s = central_series(M, g, wb.field());
          const FitResult r = fit_central_charge(wb.ctx(conv), s, pr);
          ordered_json cs = ordered_json::array();
          for (const auto& x : r.c) cs.push_back(x.str());
          runs.push_back({{"realization", convention_name(conv)},
                          {"convention", gconvention_name(g)},
                          {"trained", r.trained},
                          {"tested", r.tested},
                          {"training_equations", r.training_equations},
                          {"test_equations", r.test_equations},
                          {"test_mismatches", r.test_mismatches},
                          {"c", cs},
                          {"message", r.message}});
          if (r.pass()) {
            ++passing;
            winner = std::string(convention_name(conv)) + "/" + gconvention_name(g);
          }
        }
      out.push_back(verdict("fock.central_fit", formula, w, passing == 1, {{"hmax", pr.hmax}, {"runs", runs}},
                            passing == 1 ? "fits under " + winner : ""));
    }
  }
  return out;
}

// ---- dispatch ----------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"positive", "presentation", "shuffle", "fock", "all"};
  return names;
}

Report run_suite(const std::string& name, const Config& cfg) {
  validate(cfg);
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + name);
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
  const auto t0 = std::chrono::steady_clock::now();
  Workbench wb(cfg);
  Report rep;
  rep.suite = name;
  rep.config = cfg;
  auto add = [&](std::vector<Check> v) {
    for (auto& c : v) rep.checks.push_back(std::move(c));
  };
  if (name == "positive" || name == "all") add(positive_suite(wb));
  if (name == "presentation" || name == "all") add(presentation_suite(wb));
  if (name == "shuffle" || name == "all") add(shuffle_suite(wb));
  if (name == "fock" || name == "all") add(fock_suite(wb));
  std::sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  if (cfg.wall_time) rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wsh
