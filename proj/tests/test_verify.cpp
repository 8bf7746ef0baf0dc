#include <algorithm>

#include "doctest.h"
#include "wsh/verify.hpp"

using namespace wsh;

namespace {

Config small(int n) {
  Config c;
  c.max_degree = n;
  return c;
}

}  // namespace

TEST_CASE("rank windows") {
  CHECK(rank_window(0, 8) == std::pair<int, int>{0, 8});
  CHECK(rank_window(2, 8) == std::pair<int, int>{0, 6});
  CHECK(rank_window(-2, 8) == std::pair<int, int>{2, 8});
  CHECK(rank_window(5, 4).first > rank_window(5, 4).second);
}

TEST_CASE("config validation") {
  Config c;
  CHECK_NOTHROW(validate(c));
  c.max_degree = 1;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = Config{};
  c.kmax = 2;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nonsense", Config{}), std::invalid_argument);
}

TEST_CASE("positive suite at N = 4 skips empty windows and passes") {
  const Report r = run_suite("positive", small(4));
  CHECK(r.pass());
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));
  const Check* rec = r.find("positive.recursion.l5");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == Status::skipped);
  CHECK(rec->note == "skipped: window empty");
  const Check* cubic = r.find("positive.cubic");
  REQUIRE(cubic != nullptr);
  CHECK(cubic->status == Status::pass);
  CHECK(cubic->window == std::pair<int, int>{0, 2});
}

TEST_CASE("report JSON layout") {
  const Report r = run_suite("presentation", small(6));
  const auto j = r.to_json();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["suite"] == "presentation");
  CHECK(j["config"]["mode"] == "exact");
  CHECK_FALSE(j.contains("wall_time"));
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c["window"].size() == 2);
    CHECK((c["status"] == "pass" || c["status"] == "fail" || c["status"] == "skipped"));
  }
  CHECK(run_suite("presentation", small(6)).to_json().dump() == j.dump());
}

TEST_CASE("wall time only on request") {
  Config c = small(4);
  c.wall_time = true;
  const Report r = run_suite("presentation", c);
  CHECK(r.wall_time.has_value());
  CHECK(r.to_json().contains("wall_time"));
}

TEST_CASE("a failing relation reports its first failing block") {
  // The cubic relation holds only in the swapped realization.
  Workbench wb(small(5));
  Evaluator& e = wb.ev(ContentConvention::standard);
  const GradedOp op = e(cubic_relation(wb.kappa()));
  CHECK(op.first_nonzero_block().has_value());
}

TEST_CASE("fock suite at N = 6") {
  const Report r = run_suite("fock", small(6));
  CHECK(r.pass());
  const Check* fit = r.find("fock.central_fit");
  REQUIRE(fit != nullptr);
  CHECK(fit->note == "fits under standard/power");
}

TEST_CASE("specialized mode records k and agrees with exact mode") {
  Config c = small(5);
  c.specialize = mpq_class(7, 3);
  const Report r = run_suite("positive", c);
  CHECK(r.to_json()["config"]["kappa"] == "7/3");
  const Report x = run_suite("positive", small(5));
  REQUIRE(r.checks.size() == x.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].status == x.checks[i].status);
}
