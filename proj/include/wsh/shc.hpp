#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsh/multipoly.hpp"
#include "wsh/presentation.hpp"
#include "wsh/series.hpp"

namespace wsh {

/// G_l(x) = (x^{-1} - 1)/l (printed) or (x^{-l} - 1)/l (power); G_0 = -log in both.
enum class GConvention { printed, power };
const char* gconvention_name(GConvention g);

/// Variables of the ring F[c_0..c_M][d_1..d_{M+1}][w]: c_i is x_i, d_j is
/// x_{M+j}, and the preset parameter w is x_{2M+2}.
struct CentralRing {
  int order;
  int c(int i) const { return i; }
  int d(int j) const { return order + j; }
  int omega() const { return 2 * order + 2; }
  std::vector<std::string> names() const;
};

/// 1 + xi sum_l E_l s^{l+1} = exp(sum_l (-1)^{l+1} c_l vphi_l(s)) exp(sum_l d_{l+1} phi_l(s)),
/// phi_l = s^l sum_{q in {1,-xi,-k}} (G_l(1-qs) - G_l(1+qs)), vphi_l = s^l G_l(1+xi s), xi = 1-k.
struct ESeries {
  CentralRing ring;
  GConvention convention;
  TruncSeries<MultiPoly> series;
  std::vector<MultiPoly> e;  // E_0 .. E_{M-1}
};
/// Throws UnluckySpecialization if xi vanishes.
ESeries central_series(int order, GConvention conv, const Field& field);

/// The series coefficient s^l G_l(1 + a s) and phi_l, exposed for tests.
TruncSeries<FieldElem> g_series(int l, const FieldElem& a, int order, GConvention conv);
TruncSeries<FieldElem> phi_series(int l, const FieldElem& kappa, int order, GConvention conv);

/// E_l with c_0 = 0 and c_i = -k^i w^i.
std::vector<MultiPoly> omega_preset(const ESeries& s, const FieldElem& kappa);
/// E_l after d_j -> content_power_sum(lambda, j) in the given convention.
std::vector<MultiPoly> on_partition(const ESeries& s, const Partition& lambda, const FieldElem& kappa,
                                    ContentConvention conv);

// ---- operator side ------------------------------------------------------------

struct EOperatorCheck {
  int h = 0;
  std::pair<int, int> window{0, 0};
  int splits = 0;
  bool split_independent = false;
  bool diagonal = false;
};
/// [D_{-1,k}, D_{1,l}] for every split k + l = h: the same operator, and diagonal on Jacks.
EOperatorCheck e_operator_check(OpContext& ctx, int h);

/// Eigenvalue of [D_{-1,0}, D_{1,h}] on J_lambda; requires |lambda| + 1 <= N.
FieldElem measured_e(OpContext& ctx, int h, const Partition& lambda);

struct FitProtocol {
  int hmax = 4;
  int train_size = 2;     // all |lambda| <= train_size at h <= train_h
  int train_h = 1;
  int test_size_lo = 3;   // |lambda| in [test_size_lo, test_size_hi] at h in [test_h_lo, hmax]
  int test_size_hi = 4;
  int test_h_lo = 2;
};

struct FitResult {
  GConvention convention = GConvention::printed;
  ContentConvention realization = ContentConvention::standard;
  bool trained = false;
  bool tested = false;
  std::vector<FieldElem> c;  // fitted c_0 .. c_hmax
  int training_equations = 0;
  int test_equations = 0;
  int test_mismatches = 0;
  std::string message;
  bool pass() const { return trained && tested; }
};
/// Solves for c_0..c_hmax one at a time from the training eigenvalues (the
/// vacuum fixes every c_h, the other training partitions must agree) and
/// compares predictions with the test eigenvalues.
FitResult fit_central_charge(OpContext& ctx, const ESeries& s, const FitProtocol& protocol);

/// 3[D_{-1,2},D_{-1,1}] - [D_{-1,3},D_{-1,0}] + [D_{-1,1},D_{-1,0}] + k(k-1) [D_{-1,1},D_{-1,0}].
FreeElement lowering_cubic_base(const FieldElem& kappa);
/// Readings of the quadratic term X in base + k(k-1) X.
enum class QuadraticReading { printed_raising, lowering_plus, lowering_minus };
const char* reading_name(QuadraticReading r);
/// nullopt when the reading mixes ranks and cannot vanish.
std::optional<FreeElement> lowering_cubic(QuadraticReading r, const FieldElem& kappa);
/// [t_{-1,0}, [t_{-1,0}, t_{-1,1}]].
FreeElement lowering_serre();
/// Image under the anti-involution t_{1,k} -> t_{-1,k} / k (words reversed).
FreeElement formal_adjoint(const FreeElement& x, const FieldElem& kappa);

}  // namespace wsh
