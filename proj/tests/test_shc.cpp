#include <memory>

#include "doctest.h"
#include "wsh/shc.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();

OpContext& ctx(ContentConvention conv) {
  static auto table = std::make_shared<const JackTable>(Field(), 6);
  static OpContext standard(table, ContentConvention::standard);
  static OpContext swapped(table, ContentConvention::swapped);
  return conv == ContentConvention::standard ? standard : swapped;
}

Evaluator& ev(ContentConvention conv) {
  static Evaluator standard(ctx(ContentConvention::standard));
  static Evaluator swapped(ctx(ContentConvention::swapped));
  return conv == ContentConvention::standard ? standard : swapped;
}

constexpr ContentConvention both[] = {ContentConvention::standard, ContentConvention::swapped};

}  // namespace

TEST_CASE("g series against binomial expansions") {
  const FieldElem a(3);
  // s^2 ((1+as)^{-2} - 1)/2 = -a s^3 + 3/2 a^2 s^4 - 2 a^3 s^5
  const auto p = g_series(2, a, 5, GConvention::power);
  CHECK(p[2].is_zero());
  CHECK(p[3] == FieldElem(-3));
  CHECK(p[4] == FieldElem::rational(27, 2));
  CHECK(p[5] == FieldElem(-54));
  // s^2 ((1+as)^{-1} - 1)/2 = -a/2 s^3 + a^2/2 s^4 - a^3/2 s^5
  const auto q = g_series(2, a, 5, GConvention::printed);
  CHECK(q[3] == FieldElem::rational(-3, 2));
  CHECK(q[4] == FieldElem::rational(9, 2));
  CHECK(q[5] == FieldElem::rational(-27, 2));
  // -log(1+as) = -a s + a^2/2 s^2 - ...
  const auto g0 = g_series(0, a, 3, GConvention::power);
  CHECK(g0[1] == FieldElem(-3));
  CHECK(g0[2] == FieldElem::rational(9, 2));
  // G_1 agrees in both conventions
  CHECK(g_series(1, k, 4, GConvention::power) == g_series(1, k, 4, GConvention::printed));
}

TEST_CASE("phi_0 has no linear term") {
  for (GConvention g : {GConvention::printed, GConvention::power}) {
    const auto s = phi_series(0, k, 4, g);
    CHECK(s[0].is_zero());
    CHECK(s[1].is_zero());
  }
}

TEST_CASE("E_0 is c_0 and E_1 does not depend on the convention") {
  const auto pr = central_series(4, GConvention::printed, Field());
  const auto pw = central_series(4, GConvention::power, Field());
  for (const auto* s : {&pr, &pw}) CHECK(s->e[0] == MultiPoly::variable(s->ring.c(0)));
  CHECK(pr.e[1] == pw.e[1]);
  CHECK(pr.e[2] != pw.e[2]);
  CHECK(pr.e.size() == 4);
}

TEST_CASE("E_h is affine in c_h and free of higher c") {
  const auto s = central_series(5, GConvention::power, Field());
  for (int h = 0; h < 5; ++h) {
    CHECK(s.e[static_cast<std::size_t>(h)].degree_in(s.ring.c(h)) == 1);
    for (int j = h + 1; j <= 5; ++j) CHECK(s.e[static_cast<std::size_t>(h)].degree_in(s.ring.c(j)) == 0);
  }
}

TEST_CASE("omega preset stays polynomial in w") {
  const auto s = central_series(4, GConvention::power, Field());
  const auto e = omega_preset(s, k);
  CHECK(e[0].is_zero());
  for (const auto& p : e)
    for (const auto& [ex, c] : p.terms())
      for (std::size_t i = 0; i < ex.size(); ++i)
        if (ex[i] != 0) CHECK((static_cast<int>(i) == s.ring.omega() || static_cast<int>(i) > s.ring.order));
}

TEST_CASE("xi = 0 is an unlucky specialization") {
  CHECK_THROWS_AS(central_series(3, GConvention::power, Field(mpq_class(1))), UnluckySpecialization);
}

TEST_CASE("lowering operators satisfy the degree shift") {
  for (ContentConvention conv : both) {
    Evaluator& e = ev(conv);
    for (int l = 1; l <= 3; ++l)
      for (int kk = 0; kk + l <= 4; ++kk) {
        // [t_{0,l}, t_{-1,k}] = -t_{-1,k+l-1}
        const auto rel = bracket(t0(l), tlow(kk)) + tlow(kk + l - 1);
        CHECK(e(rel).is_zero());
      }
  }
}

TEST_CASE("E operators are split independent and diagonal") {
  for (ContentConvention conv : both)
    for (int h = 0; h <= 4; ++h) {
      const auto c = e_operator_check(ctx(conv), h);
      CHECK(c.splits == h + 1);
      CHECK(c.split_independent);
      CHECK(c.diagonal);
      CHECK(c.window == std::pair<int, int>{0, 5});
    }
}

TEST_CASE("E_0 eigenvalue is constant") {
  for (ContentConvention conv : both)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lam : partitions_of(n)) CHECK(measured_e(ctx(conv), 0, lam) == FieldElem(1));
}

TEST_CASE("lowering Serre relation vanishes") {
  for (ContentConvention conv : both) CHECK(ev(conv)(lowering_serre()).is_zero());
}

TEST_CASE("exactly one quadratic reading of the lowering cubic vanishes") {
  CHECK_FALSE(lowering_cubic(QuadraticReading::printed_raising, k).has_value());
  const auto plus = *lowering_cubic(QuadraticReading::lowering_plus, k);
  const auto minus = *lowering_cubic(QuadraticReading::lowering_minus, k);
  CHECK(ev(ContentConvention::standard)(plus).is_zero());
  CHECK_FALSE(ev(ContentConvention::standard)(minus).is_zero());
  CHECK(ev(ContentConvention::swapped)(minus).is_zero());
  CHECK_FALSE(ev(ContentConvention::swapped)(plus).is_zero());
}

TEST_CASE("formal adjoint of the raising cubic is the minus reading") {
  const auto adj = formal_adjoint(cubic_relation(k), k) * (k * k);
  CHECK(adj == *lowering_cubic(QuadraticReading::lowering_minus, k) * FieldElem(-1));
  CHECK(formal_adjoint(formal_adjoint(cubic_relation(k), k), k) == cubic_relation(k));
  CHECK(formal_adjoint(serre_relation(), k) * (k * k * k) == lowering_serre());
}

TEST_CASE("central character fit") {
  const FitProtocol pr;
  for (ContentConvention conv : both)
    for (GConvention g : {GConvention::printed, GConvention::power}) {
      const auto s = central_series(6, g, Field());
      const auto r = fit_central_charge(ctx(conv), s, pr);
      const bool expect = conv == ContentConvention::standard && g == GConvention::power;
      CAPTURE(r.message);
      CHECK(r.pass() == expect);
      if (r.trained) {
        CHECK(r.c[0] == FieldElem(1));
        CHECK(r.test_equations == 3 * (3 + 5));
      }
    }
}

TEST_CASE("fit rejects a short series") {
  const auto s = central_series(4, GConvention::power, Field());
  CHECK_THROWS_AS(fit_central_charge(ctx(ContentConvention::standard), s, FitProtocol{}), std::invalid_argument);
}
