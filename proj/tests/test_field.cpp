#include <random>

#include "doctest.h"
#include "wsh/field.hpp"
#include "wsh/multipoly.hpp"
#include "wsh/series.hpp"

using namespace wsh;

namespace {

UPoly poly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

FieldElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> d(0, 2);
  auto rp = [&](bool nonzero) {
    for (;;) {
      std::vector<mpz_class> v;
      const int deg = d(rng);
      for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
      UPoly p(v);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return FieldElem::normalize(rp(false), rp(true));
}

FieldElem specialize(const FieldElem& x, const mpq_class& t) { return FieldElem(x.eval(t)); }

const FieldElem k = FieldElem::kappa();

}  // namespace

TEST_CASE("normalize removes common factors and fixes the sign") {
  // (k^2 - 1) / (k - 1) = k + 1
  const FieldElem a = FieldElem::normalize(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(a == FieldElem::normalize(poly({1, 1}), poly({1})));
  CHECK(a.den().is_one());
  CHECK(FieldElem::normalize(poly({}), poly({0, 1})) == FieldElem());
  CHECK(FieldElem::normalize(poly({}), poly({0, 1})).den().is_one());
  const FieldElem b = FieldElem::normalize(poly({0, 1}), poly({-1}));
  CHECK(b == -k);
  CHECK(b.den().is_one());
  // integer content cancels as well
  CHECK(FieldElem::normalize(poly({2, 4}), poly({6})) == FieldElem::normalize(poly({1, 2}), poly({3})));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_WITH_AS(FieldElem::normalize(poly({1}), poly({})), "division by zero in Q(k)", std::domain_error);
  CHECK_THROWS_AS(FieldElem().inverse(), std::domain_error);
}

TEST_CASE("polynomial gcd") {
  // (k+1)(k-2) and (k+1)(k+3)
  const UPoly g = gcd(poly({-2, -1, 1}), poly({3, 4, 1}));
  CHECK(g == poly({1, 1}));
  CHECK(gcd(poly({6, 12}), poly({9})) == poly({3}));
  CHECK(gcd(poly({}), poly({-2, -4})) == poly({2, 4}));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    const FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == FieldElem());
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem(1));
  }
}

TEST_CASE("specialization commutes with ring operations") {
  std::mt19937 rng(5);
  const mpq_class t(7, 3);
  for (int it = 0; it < 40; ++it) {
    const FieldElem a = random_elem(rng), b = random_elem(rng);
    CHECK(specialize(a * b + a, t) == specialize(a, t) * specialize(b, t) + specialize(a, t));
    if (!b.is_zero() && b.den().eval(t) != 0 && b.num().eval(t) != 0) {
      CHECK(specialize(a / b, t) == specialize(a, t) / specialize(b, t));
    }
  }
}

TEST_CASE("printing") {
  CHECK((k * k - FieldElem(1)).str() == "k^2 - 1");
  CHECK((FieldElem(1) / (k - FieldElem(1))).str() == "1/(k - 1)");
  CHECK(FieldElem::rational(-3, 6).str() == "-1/2");
}

TEST_CASE("series exp and log") {
  using S = TruncSeries<FieldElem>;
  SUBCASE("exp(0) = 1") {
    const S e = series_exp(S(4));
    CHECK(e == S::constant(4, FieldElem(1)));
  }
  SUBCASE("log(1+s) is the Mercator series") {
    const S l = series_log(S::linear(3, FieldElem(1), FieldElem(1)));
    CHECK(l == S(3, {FieldElem(0), FieldElem(1), FieldElem::rational(-1, 2), FieldElem::rational(1, 3)}));
  }
  SUBCASE("exp(log(1 + xi s)) = 1 + xi s") {
    const FieldElem xi = FieldElem(1) - k;
    const S x = S::linear(5, FieldElem(1), xi);
    CHECK(series_exp(series_log(x)) == x);
  }
  SUBCASE("log(exp(x)) = x") {
    const S x(5, {FieldElem(0), k, FieldElem(2), FieldElem(1) - k, FieldElem::rational(1, 5), k * k});
    CHECK(series_log(series_exp(x)) == x);
  }
  SUBCASE("pow(1+s, -1) is the geometric series") {
    const S g = series_pow(S::linear(4, FieldElem(1), FieldElem(1)), -1);
    CHECK(g == S(4, {FieldElem(1), FieldElem(-1), FieldElem(1), FieldElem(-1), FieldElem(1)}));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(series_exp(S::constant(3, FieldElem(1))), std::domain_error);
    CHECK_THROWS_AS(series_log(S::constant(3, FieldElem(2))), std::domain_error);
  }
}

TEST_CASE("series multiplication is commutative and associative") {
  using S = TruncSeries<FieldElem>;
  std::mt19937 rng(3);
  auto rs = [&] {
    S s(4);
    for (int i = 0; i <= 4; ++i) s[i] = random_elem(rng);
    return s;
  };
  for (int it = 0; it < 10; ++it) {
    const S a = rs(), b = rs(), c = rs();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("series over multivariate polynomials") {
  using S = TruncSeries<MultiPoly>;
  const MultiPoly x = MultiPoly::variable(0);
  // exp(x s) has coefficients x^n / n!
  const S e = series_exp(S::linear(4, MultiPoly(), x));
  CHECK(e[3] == x.pow(3) * FieldElem::rational(1, 6));
  CHECK(series_log(e) == S::linear(4, MultiPoly(), x));
}

TEST_CASE("multivariate polynomial basics") {
  const MultiPoly z1 = MultiPoly::variable(0), z2 = MultiPoly::variable(1);
  const MultiPoly p = (z1 + z2).pow(2);
  CHECK(p.is_symmetric(2));
  CHECK(!(z1 * z1 + z2).is_symmetric(2));
  CHECK(p.total_degree() == 2);
  CHECK(p.permuted({1, 0}) == p);
  const MultiPoly d = z1 - z2;
  CHECK((p * d).divexact_in(d, 0) == p);
  CHECK_THROWS_AS((p + MultiPoly(1)).divexact_in(d, 0), std::domain_error);
  CHECK(p.substitute({{1, MultiPoly(FieldElem(3))}}) == (z1 + MultiPoly(3)).pow(2));
}
