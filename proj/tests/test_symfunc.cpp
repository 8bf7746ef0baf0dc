#include <memory>

#include "doctest.h"
#include "wsh/linalg.hpp"
#include "wsh/symfunc.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();

const JackTable& table6() {
  static const JackTable t(Field(), 6);
  return t;
}

SymFunc p(const Partition& part, const FieldElem& c = FieldElem(1)) { return SymFunc::basis_element(Basis::power, part, c); }

SymFunc jack(const Partition& part) {
  return basis_convert(SymFunc::basis_element(Basis::jack, part), Basis::power, table6());
}

}  // namespace

TEST_CASE("partitions and z") {
  CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partition_count(8) == 22);
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(-1) == 0);
  CHECK(z_lambda({2, 1, 1}) == 4);
  CHECK(z_lambda({3, 3}) == 18);
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK(!dominates({3, 1, 1, 1}, {2, 2, 2}));
  CHECK(!dominates({2, 2, 2}, {3, 1, 1, 1}));
}

TEST_CASE("content power sums in both conventions") {
  // Boxes of (2,1): (0,0), (1,0), (0,1).
  CHECK(content_power_sum({2, 1}, 1, k) == FieldElem(3));
  CHECK(content_power_sum({2, 1}, 2, k, ContentConvention::standard) == FieldElem(1) - k);
  CHECK(content_power_sum({2, 1}, 2, k, ContentConvention::swapped) == k - FieldElem(1));
  CHECK(content_power_sum({2, 1}, 3, k) == FieldElem(1) + k * k);
  CHECK(content_power_sum({}, 2, k) == FieldElem());
}

TEST_CASE("small Jack polynomials") {
  CHECK(jack({2}) == p({1, 1}) + p({2}, k.inverse()));
  CHECK(jack({1, 1}) == p({1, 1}) - p({2}));
  CHECK(jack({1}) == p({1}));
}

TEST_CASE("power-sum pairing and transition matrices") {
  CHECK(inner_product(p({2}), p({2}), table6()) == FieldElem(2) / k);
  CHECK(inner_product(p({2, 1}), p({1, 1, 1}), table6()) == FieldElem());
  const SymFunc m2 = SymFunc::basis_element(Basis::monomial, {2});
  const SymFunc m11 = SymFunc::basis_element(Basis::monomial, {1, 1});
  CHECK(basis_convert(p({1, 1}), Basis::monomial, table6()) == m2 + m11 * FieldElem(2));
  CHECK(basis_convert(m11, Basis::power, table6()) == (p({1, 1}) - p({2})) * FieldElem::rational(1, 2));
}

TEST_CASE("Jack basis properties up to degree 6") {
  const JackTable& t = table6();
  for (int n = 0; n <= 6; ++n) {
    const auto& parts = t.partitions(n);
    const int m = t.dim(n);
    const FMatrix& jm = t.jack_in_m(n);
    for (int j = 0; j < m; ++j) {
      // triangular in dominance, normalized on m_{1^n}
      for (int i = 0; i < m; ++i)
        if (!jm(i, j).is_zero()) CHECK(dominates(parts[static_cast<std::size_t>(j)], parts[static_cast<std::size_t>(i)]));
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
      CHECK(jm(m - 1, j) == FieldElem(fact));
    }
    // orthogonal for the pairing, with the stored norms on the diagonal
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        FieldElem s;
        for (int i = 0; i < m; ++i) s += t.jack_in_p(n)(i, a) * t.jack_in_p(n)(i, b) * t.p_gram(n)[static_cast<std::size_t>(i)];
        CHECK(s == (a == b ? t.jack_norm(n)[static_cast<std::size_t>(a)] : FieldElem()));
      }
    CHECK(matmul(t.p_in_jack(n), t.jack_in_p(n)) == FMatrix::identity(m));
  }
}

TEST_CASE("Jack coefficients on the monomial basis are polynomials in alpha of degree below n") {
  const JackTable& t = table6();
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : t.jack_in_m(n).data()) {
      const FieldElem y = x * k.pow(n - 1);
      CHECK(y.is_polynomial());
      CHECK(y.num().degree() <= n - 1);
    }
}

TEST_CASE("specialized table agrees with generic table evaluated") {
  const mpq_class v(5, 2);
  const JackTable s(Field(v), 5);
  for (int n = 0; n <= 5; ++n) {
    const FMatrix& a = s.jack_in_p(n);
    const FMatrix& b = table6().jack_in_p(n);
    for (std::size_t i = 0; i < a.data().size(); ++i) CHECK(a.data()[i] == FieldElem(b.data()[i].eval(v)));
  }
}

TEST_CASE("unlucky specialization is reported") {
  // At k = -1 the norm of J_(1,1) vanishes.
  CHECK_THROWS_AS(JackTable(Field(mpq_class(-1)), 3), UnluckySpecialization);
}

TEST_CASE("truncation is enforced") {
  CHECK_THROWS_WITH_AS(table6().partitions(7), "beyond truncation", std::out_of_range);
}
