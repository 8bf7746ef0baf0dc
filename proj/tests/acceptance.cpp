// Reference configuration N = 8, K = L = 5, M = 6, exact mode. One line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wsh/verify.hpp"

using namespace wsh;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail = {}) {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Every check whose id starts with prefix passes; returns the number matched.
int all_pass(const Report& r, const std::string& prefix, bool& ok) {
  int n = 0;
  for (const auto& c : r.checks) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    ++n;
    if (c.status != Status::pass) ok = false;
  }
  if (n == 0) ok = false;
  return n;
}

bool passes(const Report& r, const std::string& id) {
  const Check* c = r.find(id);
  return c != nullptr && c->status == Status::pass;
}

// ---- independent oracles ------------------------------------------------------

int mult(const Partition& p, int i) { return static_cast<int>(std::count(p.begin(), p.end(), i)); }
Partition without(Partition p, int i) {
  p.erase(std::find(p.begin(), p.end(), i));
  return p;
}
Partition with(Partition p, int i) {
  p.push_back(i);
  std::sort(p.rbegin(), p.rend());
  return p;
}

// Laplace-Beltrami operator on power sums, written from its differential form
//   (a/2) sum i j p_{i+j} d_i d_j + (1/2) sum (i+j) p_i p_j d_{i+j} + ((a-1)/2) sum i(i-1) p_i d_i, a = 1/k.
FMatrix laplace_beltrami(const JackTable& t, int n, const FieldElem& kappa) {
  const FieldElem a = kappa.inverse(), half = FieldElem::rational(1, 2);
  const auto& parts = t.partitions(n);
  FMatrix m(t.dim(n), t.dim(n));
  for (std::size_t col = 0; col < parts.size(); ++col) {
    const Partition& mu = parts[col];
    auto add = [&](const Partition& q, const FieldElem& c) { m(t.index(q), static_cast<int>(col)) += c; };
    for (int i = 1; i <= n; ++i) {
      const int mi = mult(mu, i);
      if (mi == 0) continue;
      const Partition rest = without(mu, i);
      for (int j = 1; j <= n; ++j) {
        const int mj = mult(rest, j);
        if (mj > 0) add(with(without(rest, j), i + j), a * half * FieldElem(static_cast<long>(i) * j * mi * mj));
      }
      for (int x = 1; x < i; ++x) add(with(with(rest, x), i - x), half * FieldElem(static_cast<long>(i) * mi));
      add(mu, (a - FieldElem(1)) * half * FieldElem(static_cast<long>(i) * (i - 1) * mi));
    }
  }
  return m;
}

// Multisets of generators (r', d'), r' >= 1, d' >= 0, with ranks summing to r and orders to d.
long count_monomials(int r, int d, int min_r = 1, int min_d = 0) {
  if (r == 0) return d == 0 ? 1 : 0;
  long n = 0;
  for (int gr = min_r; gr <= r; ++gr)
    for (int gd = gr == min_r ? min_d : 0; gd <= d; ++gd) n += count_monomials(r - gr, d - gd, gr, gd);
  return n;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const Config cfg;
  const Report all = run_suite("all", cfg);
  const double first_run = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  {
    bool ok = true;
    const int commute = all_pass(all, "positive.commute.", ok);
    const int shift = all_pass(all, "positive.shift.", ok);
    const int rank2 = all_pass(all, "positive.rank2.", ok);
    ok = ok && commute == 10 && shift == 25 && rank2 == 9 && passes(all, "positive.cubic") && passes(all, "positive.serre");
    report(ok, "relations: Sekiguchi commutators (l,k <= 5), shifts (l <= 5, k <= 4), cubic, Serre, rank-2 family (k,l <= 2)",
           std::to_string(commute + shift + rank2 + 2) + " checks");
  }
  {
    bool ok = true;
    all_pass(all, "positive.spectrum.", ok);
    for (int l = 1; l <= 4; ++l) ok = ok && passes(all, "positive.spectrum.l" + std::to_string(l));
    // D[0,1] is the degree and D[0,2] is -k times the Laplace-Beltrami operator in the swapped realization.
    Workbench wb(cfg);
    OpContext& c = wb.ctx(ContentConvention::swapped);
    for (int n = 0; n <= cfg.max_degree; ++n) {
      ok = ok && c.sekiguchi(1).blocks.at(n) == scale(FMatrix::identity(c.table().dim(n)), FieldElem(n));
      ok = ok && c.sekiguchi(2).blocks.at(n) == scale(laplace_beltrami(c.table(), n, wb.kappa()), -wb.kappa());
    }
    report(ok, "Sekiguchi spectrum on Jack polynomials, |lambda| <= 8, l <= 4");
  }
  {
    bool ok = true;
    const int rec = all_pass(all, "positive.recursion.", ok);
    const int kl = all_pass(all, "positive.kl_identity.", ok);
    report(ok && rec == 4 && kl == 10, "identities: (l-1)D[l,0] = [D[1,1],D[l-1,0]] (l <= 5), [D[k,1],D[l,0]] = kl D[k+l,0] (k+l <= 5)");
  }
  {
    bool ok = true;
    const int n = all_pass(all, "positive.leading_term.", ok);
    report(ok && n == 9, "leading-term law D'[r,d] - r^(d-1) D[r,d] in F[r,<=d-1], r <= 3, d <= 2");
  }
  {
    bool ok = true;
    const int n = all_pass(all, "positive.pbw.", ok);
    for (int r = 1; r <= 3; ++r)
      for (int d = 0; d <= 2; ++d) {
        const Check* c = all.find("positive.pbw.r" + std::to_string(r) + ".d" + std::to_string(d));
        ok = ok && c != nullptr && c->witness["monomials"] == count_monomials(r, d) && c->witness["window_limited"] == false;
      }
    report(ok && n == 9, "graded dimensions equal free monomial counts, r <= 3, d <= 2");
  }
  {
    bool ok = passes(all, "shuffle.associativity") && passes(all, "shuffle.z0z0") && passes(all, "shuffle.kernel_function") &&
              passes(all, "shuffle.rank2_kernel");
    const Check* k = all.find("shuffle.rank2_kernel");
    ok = ok && k != nullptr && k->witness["kmax"] == 4;
    report(ok, "shuffle: associativity (20 triples), z^0*z^0, k(u) = -h(-u), rank-2 kernels at K = 4 with h-divisibility");
  }
  {
    bool ok = true;
    for (const char* real : {"standard", "swapped"}) {
      const std::string p = std::string("fock.") + real + ".";
      all_pass(all, p + "shift.", ok);
      for (int h = 0; h <= 4; ++h) ok = ok && passes(all, p + "e_operator.h" + std::to_string(h));
      ok = ok && passes(all, p + "lowering_serre") && passes(all, p + "lowering_cubic");
    }
    ok = ok && passes(all, "fock.central_fit") && passes(all, "fock.e0");
    const Check* fit = all.find("fock.central_fit");
    int fitted = 0;
    std::set<std::string> conventions;
    if (fit)
      for (const auto& run : fit->witness["runs"])
        if (run["trained"] == true && run["tested"] == true) {
          ++fitted;
          conventions.insert(run["convention"].get<std::string>());
        }
    ok = ok && fitted == 1 && conventions.size() == 1;
    report(ok, "Fock: lowering shifts, split-independent diagonal E_h (h <= 4), lowering cubics, central fit, E_0 = c_0",
           fit ? fit->note : "");
  }
  {
    const Check* c = all.find("presentation.rank2_kernel");
    const bool ok = passes(all, "presentation.rank2_kernel") && c->witness["kmax"] == 5 &&
                    c->witness["kernel_dim"] == c->witness["relation_span_dim"];
    report(ok, "rank-2 operator kernel equals the relation span at K = 5",
           c ? "kernel dim " + c->witness["kernel_dim"].dump() : "");
  }
  {
    const Report again = run_suite("all", cfg);
    report(all.to_json().dump(2) == again.to_json().dump(2), "two verify-all reports are byte-identical");
  }
  report(first_run < 600.0, "one verify-all run under 10 minutes", std::to_string(static_cast<int>(first_run)) + " s");
  return failures == 0 ? 0 : 1;
}
