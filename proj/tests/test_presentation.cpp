#include <memory>
#include <random>

#include "doctest.h"
#include "wsh/presentation.hpp"

using namespace wsh;

namespace {

const FieldElem k = FieldElem::kappa();

OpContext& ctx() {
  static OpContext c(std::make_shared<const JackTable>(Field(), 6), ContentConvention::swapped);
  return c;
}

Evaluator& ev() {
  static Evaluator e(ctx());
  return e;
}

FreeElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 3), kind(0, 1), idx(0, 2), coef(-3, 3);
  FreeElement x;
  for (int t = 0; t < 3; ++t) {
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int kd = kind(rng);
      w.push_back({kd, kd == 0 ? idx(rng) + 1 : idx(rng)});
    }
    x.add(w, FieldElem(coef(rng)));
  }
  return x;
}

int rank1_count(const FreeElement& x) {
  // all words of one element share a rank in these tests
  int r = -1;
  for (const auto& [w, c] : x.terms()) {
    int s = 0;
    for (const auto& l : w) s += l.kind;
    r = s;
  }
  return r;
}

}  // namespace

TEST_CASE("free algebra products and brackets") {
  const FreeElement a = t1(0), b = t0(2);
  CHECK((a * b).terms().size() == 1);
  CHECK(bracket(a, a).is_zero());
  CHECK(bracket(a, b) == a * b - b * a);
  CHECK((FieldElem(2) * a - a - a).is_zero());
  CHECK(word_str({{0, 2}, {1, 0}}) == "D[0,2]D[1,0]");
}

TEST_CASE("normal ordering") {
  CHECK(normal_order(t0(2) * t1(0), 5) == t1(0) * t0(2) + t1(1));
  CHECK(normal_order(t1(0) * t0(2), 5) == t1(0) * t0(2));
  CHECK(normal_order(t0(3) * t0(2), 5) == t0(2) * t0(3));
  // t_{0,2} t_{0,3} t_{1,0}: move t_{0,3} past t_{1,0} first, then t_{0,2} past both results
  const FreeElement x = normal_order(t0(2) * t0(3) * t1(0), 5);
  CHECK(x == t1(0) * t0(2) * t0(3) + t1(2) * t0(2) + t1(1) * t0(3) + t1(3));
  CHECK_THROWS_WITH_AS(normal_order(t0(4) * t1(3), 5), "index overflow; raise K", std::out_of_range);
  CHECK_THROWS_AS(normal_order(tlow(0) * t1(0), 5), std::invalid_argument);
}

TEST_CASE("normal ordering is sound under evaluation and idempotent") {
  std::mt19937 rng(17);
  for (int it = 0; it < 12; ++it) {
    FreeElement x = random_element(rng);
    // keep a single rank so the evaluation is one graded operator
    const int r = rank1_count(x);
    FreeElement y;
    for (const auto& [w, c] : x.terms()) {
      int s = 0;
      for (const auto& l : w) s += l.kind;
      if (s == r) y.add(w, c);
    }
    const FreeElement n = normal_order(y, 8);
    CHECK(normal_order(n, 8) == n);
    if (n.is_zero()) continue;
    CHECK((ev()(y) - ev()(n)).is_zero());
  }
}

TEST_CASE("evaluation of generators and defining relations") {
  const GradedOp one = ev()(t1(0));
  CHECK(one.apply(0, FVec{FieldElem(1)}) == FVec{FieldElem(1)});
  CHECK(ev()(cubic_relation(k)).is_zero());
  CHECK(ev()(serre_relation()).is_zero());
  for (int l = 1; l <= 3; ++l)
    for (int j = 0; j <= 2; ++j) CHECK(ev()(shift_relation(l, j)).is_zero());
  CHECK(ev()(commuting_relation(2, 3)).is_zero());
  CHECK(!ev()(t1(0) * t1(1)).is_zero());
}

TEST_CASE("rank-2 relation family") {
  CHECK(rank2_relation(0, 0, k) == FieldElem(2) * cubic_relation(k));
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) CHECK(ev()(rank2_relation(a, b, k)).is_zero());
}

TEST_CASE("generating-function coefficients are the negated rank-2 relations") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) CHECK(generating_coefficient(a, b, k) == FieldElem(-1) * rank2_relation(a, b, k));
}

TEST_CASE("rank-2 coordinates") {
  const FVec v = rank2_coordinates(t1(1) * t1(2) - t1(2) * t1(1), 2);
  CHECK(v[5] == FieldElem(1));
  CHECK(v[7] == FieldElem(-1));
  CHECK_THROWS_AS(rank2_coordinates(t1(3) * t1(0), 2), std::out_of_range);
}

TEST_CASE("rank-2 kernel equals the relation span at small K") {
  const Rank2Match m = rank2_kernel_match(ev(), 4);
  CHECK(m.products == 25);
  CHECK(m.relations == 4);
  CHECK(m.relation_span_dim == 3);
  CHECK(m.kernel_dim == 3);
  CHECK(m.match());
}
