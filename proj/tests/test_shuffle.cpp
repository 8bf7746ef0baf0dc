#include <memory>

#include "doctest.h"
#include "wsh/shuffle.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();
const MultiPoly z1 = MultiPoly::variable(0), z2 = MultiPoly::variable(1);

// g(u) + g(-u) = (h(u) - h(-u)) / u, expanded by hand from the factored cubic.
MultiPoly two_point_oracle() {
  const MultiPoly u = z1 - z2;
  const FieldElem c = k + (FieldElem(1) - k) * (FieldElem(1) - k);
  return FieldElem(2) * u * u - MultiPoly(FieldElem(2) * c);
}

}  // namespace

TEST_CASE("kernel polynomials") {
  const MultiPoly u = MultiPoly::variable(0);
  const FieldElem one(1);
  CHECK(kernel_h(k) == u.pow(3) - (k * k - k + one) * u - MultiPoly(k * (one - k)));
  CHECK(kernel_k(k) + kernel_h(k).substitute({{0, -u}}) == MultiPoly());
  CHECK(kernel_k(k).coeff({}) == k * (one - k));
}

TEST_CASE("unit and symmetry checks") {
  const ShuffleElem p = random_shuffle_elem(2, 2, 9, k);
  CHECK(star_product(ShuffleElem::unit(), p, k) == p);
  CHECK(star_product(p, ShuffleElem::unit(), k) == p);
  CHECK_THROWS_AS(ShuffleElem(2, z1), std::invalid_argument);
}

TEST_CASE("two-point product") {
  const ShuffleElem z0 = ShuffleElem::power(0);
  CHECK(star_product(z0, z0, k).poly() == two_point_oracle());
}

TEST_CASE("degree and leading term of z^k * z^l") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const MultiPoly p = star_product(ShuffleElem::power(a), ShuffleElem::power(b), k).poly();
      CHECK(p.total_degree() == a + b + 2);
      // top-degree part: symmetrization of z1^a z2^b (z1 - z2)^2
      MultiPoly top;
      for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int x : e) d += x;
        if (d == a + b + 2) top += MultiPoly::monomial(e, c);
      }
      const MultiPoly sq = (z1 - z2) * (z1 - z2);
      CHECK(top == (MultiPoly::monomial({a, b}, FieldElem(1)) + MultiPoly::monomial({b, a}, FieldElem(1))) * sq);
    }
}

TEST_CASE("parallel and serial products agree") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const ShuffleElem p = random_shuffle_elem(2, 2, s, k), q = random_shuffle_elem(1, 3, s + 100, k);
    CHECK(star_product(p, q, k) == star_product_serial(p, q, k));
  }
}

TEST_CASE("associativity on random triples") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const int a = 1 + static_cast<int>(s % 2), b = 1, c = 1;
    const ShuffleElem p = random_shuffle_elem(a, 2, 3 * s, k);
    const ShuffleElem q = random_shuffle_elem(b, 2, 3 * s + 1, k);
    const ShuffleElem r = random_shuffle_elem(c, 2, 3 * s + 2, k);
    CHECK(star_product(star_product(p, q, k), r, k) == star_product(p, star_product(q, r, k), k));
  }
}

TEST_CASE("cubic relation vanishes in the shuffle algebra") {
  auto zz = [](int a, int b) { return star_product(ShuffleElem::power(a), ShuffleElem::power(b), k).poly(); };
  const FieldElem kk = k * (k - FieldElem(1));
  const MultiPoly r = FieldElem(3) * (zz(2, 1) - zz(1, 2)) - (zz(3, 0) - zz(0, 3)) + (zz(1, 0) - zz(0, 1)) +
                      kk * (zz(0, 0) + zz(1, 0) - zz(0, 1));
  CHECK(r.is_zero());
}

TEST_CASE("rank-2 shuffle kernel against operators at small K") {
  OpContext ctx(std::make_shared<const JackTable>(Field(), 6), ContentConvention::swapped);
  Evaluator ev(ctx);
  const ShuffleKernelReport rep = rank2_kernel_compare(ev, 3);
  CHECK(rep.products == 16);
  CHECK(rep.shuffle_kernel_dim == 1);
  CHECK(rep.operator_kernel_dim == 1);
  CHECK(rep.match());
}

TEST_CASE("division by h(z2 - z1)") {
  // the cubic relation in coordinates (k, l) -> index 4k + l at kmax = 3
  const FVec v = rank2_coordinates(cubic_relation(k), 3);
  const MultiPoly q = divide_by_h(v, 3, k);
  CHECK(q.is_symmetric(2));
  FVec bad(16);
  bad[0] = FieldElem(1);
  CHECK_THROWS_AS(divide_by_h(bad, 3, k), std::domain_error);
}
