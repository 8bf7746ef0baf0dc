#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "wsh/verify.hpp"

namespace {

using nlohmann::ordered_json;

// Bad arguments detected after parsing; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string monomial_key(const wsh::Exponent& e, const std::vector<std::string>& names) {
  std::string key;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!key.empty()) key += '*';
    key += names.at(i);
    if (e[i] > 1) key += '^' + std::to_string(e[i]);
  }
  return key.empty() ? "1" : key;
}

ordered_json poly_json(const wsh::MultiPoly& p, const std::vector<std::string>& names) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[monomial_key(e, names)] = c.str();
  return j;
}

void emit(const ordered_json& j, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_jack(const wsh::Config& cfg, int n, const std::string& basis, const std::string& format) {
  if (n < 0 || n > 14) throw UsageError("jack degree must lie in [0, 14]");
  const wsh::Field field = cfg.specialize ? wsh::Field(*cfg.specialize) : wsh::Field();
  const wsh::JackTable t(field, n);
  const bool mono = basis == "monomial";
  const wsh::FMatrix& m = mono ? t.jack_in_m(n) : t.jack_in_p(n);
  const auto& parts = t.partitions(n);
  ordered_json arr = ordered_json::array();
  std::string text;
  for (int j = 0; j < m.cols(); ++j) {
    ordered_json coeffs = ordered_json::object();
    std::string line = "J" + wsh::partition_str(parts[static_cast<std::size_t>(j)]) + " =";
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      const std::string label = wsh::partition_str(parts[static_cast<std::size_t>(i)]);
      coeffs[label] = m(i, j).str();
      line += std::string(line.back() == '=' ? " (" : " + (") + m(i, j).str() + ") " + (mono ? "m" : "p") + label;
    }
    arr.push_back({{"partition", wsh::partition_str(parts[static_cast<std::size_t>(j)])}, {"coefficients", coeffs}});
    text += line + '\n';
  }
  ordered_json out{{"schema", "wsh-jack/1"}, {"degree", n}, {"basis", basis}, {"field", field.name()}, {"jacks", arr}};
  emit(out, text, format);
  return 0;
}

int cmd_eseries(const wsh::Config& cfg, const std::string& conv, const std::string& preset, const std::string& format) {
  const wsh::Field field = cfg.specialize ? wsh::Field(*cfg.specialize) : wsh::Field();
  const wsh::GConvention g = conv == "printed" ? wsh::GConvention::printed : wsh::GConvention::power;
  const wsh::ESeries s = wsh::central_series(cfg.series_order, g, field);
  auto names = s.ring.names();
  std::vector<wsh::MultiPoly> e = s.e;
  ordered_json extra;
  int code = 0;
  if (preset == "omega") {
    e = wsh::omega_preset(s, field.kappa());
  } else if (preset == "fitted") {
    wsh::Workbench wb(cfg);
    wsh::FitProtocol pr;
    pr.hmax = std::min({pr.hmax, cfg.series_order - 1, cfg.kmax - 1});
    const wsh::FitResult r = wsh::fit_central_charge(wb.ctx(wsh::ContentConvention::standard), s, pr);
    extra = {{"trained", r.trained}, {"tested", r.tested}, {"message", r.message}};
    // A fit that trains but does not reproduce the test set is a failure.
    if (!r.trained || !r.tested) code = 1;
    if (r.trained) {
      std::map<int, wsh::MultiPoly> sub;
      for (std::size_t i = 0; i < r.c.size(); ++i) sub[s.ring.c(static_cast<int>(i))] = wsh::MultiPoly(r.c[i]);
      for (auto& p : e) p = p.substitute(sub);
    }
  }
  ordered_json coeffs = ordered_json::object();
  std::string text;
  for (std::size_t h = 0; h < e.size(); ++h) {
    coeffs["E" + std::to_string(h)] = poly_json(e[h], names);
    text += "E" + std::to_string(h) + " = " + e[h].str(names) + '\n';
  }
  ordered_json out{{"schema", "wsh-eseries/1"},
                   {"order", cfg.series_order},
                   {"convention", wsh::gconvention_name(g)},
                   {"preset", preset},
                   {"field", field.name()},
                   {"coefficients", coeffs}};
  if (!extra.is_null()) out["fit"] = extra;
  emit(out, text, format);
  return code;
}

int cmd_dims(const wsh::Config& cfg, int r, int d, const std::string& format) {
  if (r < 1 || r > 3 || d < 0 || d > 4) throw UsageError("dims needs 1 <= r <= 3 and 0 <= d <= 4");
  if (r > cfg.max_degree) throw UsageError("rank exceeds max-degree");
  wsh::Workbench wb(cfg);
  wsh::Filtration f(wb.ctx(wsh::ContentConvention::swapped));
  ordered_json rows = ordered_json::array();
  std::string text = "rank " + std::to_string(r) + "\n  d  dim  graded  monomials\n";
  bool all_match = true;
  for (int k = 0; k <= d; ++k) {
    const int dim = f.dimension(r, k), gr = dim - f.dimension(r, k - 1);
    const long want = wsh::free_monomial_count(r, k);
    all_match = all_match && gr == want;
    const bool limited = f.window_limited(r, k);
    rows.push_back({{"order", k}, {"dim", dim}, {"graded_dim", gr}, {"monomials", want}, {"window_limited", limited}});
    text += "  " + std::to_string(k) + "  " + std::to_string(dim) + "  " + std::to_string(gr) + "  " +
            std::to_string(want) + (limited ? "  window-limited; increase N" : "") + '\n';
  }
  ordered_json out{{"schema", "wsh-dims/1"}, {"rank", r}, {"max_degree", cfg.max_degree}, {"rows", rows}};
  emit(out, text, format);
  return all_match ? 0 : 1;
}

int cmd_verify(const wsh::Config& cfg, const std::string& suite, const std::string& format) {
  const wsh::Report rep = wsh::run_suite(suite, cfg);
  emit(rep.to_json(), rep.to_text(), format);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for the SH^c algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");

  wsh::Config cfg;
  std::string specialize, format = "json";
  app.add_option("--max-degree", cfg.max_degree, "truncation degree N")->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "index bound K for D[1,k]")->capture_default_str();
  app.add_option("--lmax", cfg.lmax, "index bound L for D[0,l]")->capture_default_str();
  app.add_option("--series-order", cfg.series_order, "series order M")->capture_default_str();
  app.add_option("--specialize", specialize, "evaluate k at this rational");
  app.add_option("--jobs", cfg.jobs, "OpenMP threads (0 keeps the default)")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timing", cfg.wall_time, "include wall time in reports");

  int jack_n = 0;
  std::string basis = "monomial";
  auto* jack = app.add_subcommand("jack", "Jack polynomials of degree n");
  jack->add_option("n", jack_n, "degree")->required();
  jack->add_option("--basis", basis, "output basis")->check(CLI::IsMember({"monomial", "power"}))->capture_default_str();

  std::string gconv = "power", preset = "none";
  std::optional<int> order;
  auto* eseries = app.add_subcommand("eseries", "coefficients E_l of the central series");
  eseries->add_option("--order", order, "series order (overrides --series-order)");
  eseries->add_option("--convention", gconv, "G_l convention")->check(CLI::IsMember({"printed", "power"}))->capture_default_str();
  eseries->add_option("--preset", preset, "central parameters")->check(CLI::IsMember({"none", "omega", "fitted"}))->capture_default_str();

  int dims_r = 0, dims_d = 0;
  auto* dims = app.add_subcommand("dims", "graded dimensions of the order filtration");
  dims->add_option("r", dims_r, "rank")->required();
  dims->add_option("d", dims_d, "maximal order")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(wsh::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!specialize.empty()) {
      mpq_class q;
      if (q.set_str(specialize, 10) != 0) throw UsageError("--specialize expects a rational such as 7/3");
      q.canonicalize();
      cfg.specialize = q;
    }
    if (order) cfg.series_order = *order;
    wsh::validate(cfg);
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
    if (*jack) return cmd_jack(cfg, jack_n, basis, format);
    if (*eseries) return cmd_eseries(cfg, gconv, preset, format);
    if (*dims) return cmd_dims(cfg, dims_r, dims_d, format);
    return cmd_verify(cfg, suite, format);
  } catch (const UsageError& e) {
    std::cerr << "wsh: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "wsh: " << e.what() << '\n';
    return 2;
  } catch (const wsh::UnluckySpecialization& e) {
    std::cerr << "wsh: " << e.what() << '\n';
    return 1;
  }
}
