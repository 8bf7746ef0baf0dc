#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wsh/shc.hpp"
#include "wsh/shuffle.hpp"

namespace wsh {

inline constexpr const char* kReportSchema = "wsh-report/1";

struct Config {
  int max_degree = 8;    // N
  int kmax = 5;          // K
  int lmax = 5;          // L
  int series_order = 6;  // M
  std::optional<mpq_class> specialize;
  int jobs = 0;  // 0 keeps the OpenMP default
  bool wall_time = false;
};
/// Throws std::invalid_argument unless N >= 2, K, L >= 3 and M >= 2.
void validate(const Config& cfg);

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct Check {
  std::string id;
  std::string formula;
  std::pair<int, int> window{0, -1};  // source degrees, or the parameter range for non-operator checks
  Status status = Status::fail;
  std::optional<int> first_failing_block;
  std::string note;
  nlohmann::ordered_json witness;  // null when there is nothing to add
};

struct Report {
  std::string suite;
  Config config;
  std::vector<Check> checks;  // sorted by id
  std::optional<double> wall_time;

  /// Every non-skipped check passes.
  bool pass() const;
  const Check* find(const std::string& id) const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Shared tables and operator contexts for one configuration; both content
/// conventions are built on demand over one Jack table.
class Workbench {
 public:
  explicit Workbench(Config cfg);

  const Config& config() const { return cfg_; }
  const Field& field() const { return field_; }
  FieldElem kappa() const { return field_.kappa(); }
  std::shared_ptr<const JackTable> table();
  OpContext& ctx(ContentConvention conv);
  Evaluator& ev(ContentConvention conv);

 private:
  Config cfg_;
  Field field_;
  std::shared_ptr<const JackTable> table_;
  std::map<ContentConvention, std::unique_ptr<OpContext>> ctx_;
  std::map<ContentConvention, std::unique_ptr<Evaluator>> ev_;
};

const std::vector<std::string>& suite_names();
std::vector<Check> positive_suite(Workbench& wb);
std::vector<Check> presentation_suite(Workbench& wb);
std::vector<Check> shuffle_suite(Workbench& wb);
std::vector<Check> fock_suite(Workbench& wb);

/// Runs a suite ("all" runs every suite on one workbench). Throws
/// std::invalid_argument on an unknown name or an invalid config.
Report run_suite(const std::string& name, const Config& cfg);

/// Source degrees [max(0,-r), N - max(0,r)] on which a rank-r operator is defined.
std::pair<int, int> rank_window(int rank, int max_degree);

}  // namespace wsh
