// orbitkit command-line front end.
//
//   orbitkit verify|simulate|brackets|table <config.json> [--seed N] [--out-dir PATH]
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 configuration error.

#include "reports.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace orbitkit;
using namespace orbitkit::cli;

namespace {

constexpr int kOk = 0, kFailure = 1, kConfigError = 2;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

fs::path resolve(const Options& opt, const ScenarioConfig& cfg, std::initializer_list<std::string_view> kinds,
                 const std::string& fallback) {
  const fs::path rel = cfg.output_path(kinds).value_or(fallback);
  return rel.is_absolute() ? rel : fs::path(opt.out_dir) / rel;
}

int cmd_verify(const Options& opt, const ScenarioConfig& cfg) {
  const auto results = verify::run_all(cfg.seed);
  json suites = json::array();
  for (const auto& r : results) suites.push_back(suite_json(r));
  bool ok = verify::all_passed(results);
  if (cfg.has_point()) {
    for (const auto& r : scenario_suites(cfg)) {
      suites.push_back(suite_json(r));
      ok = ok && r.passed;
    }
  }
  const json report = {{"schema_version", kSchemaVersion}, {"command", "verify"},
                       {"family", family_name(cfg.family)}, {"seed", cfg.seed},
                       {"suites", suites},               {"passed", ok}};
  const fs::path out = resolve(opt, cfg, {"report", "verify"}, "verify_report.json");
  write_atomically(out, report.dump(2) + "\n");
  for (const auto& s : suites)
    std::cout << (s["passed"].get<bool>() ? "PASS " : (s["informational"].get<bool>() ? "INFO " : "FAIL "))
              << s["name"].get<std::string>() << "  max_dev=" << s["max_deviation"].get<double>() << "\n";
  std::cout << "report: " << out.string() << "\n";
  return ok ? kOk : kFailure;
}

int cmd_simulate(const Options& opt, const ScenarioConfig& cfg) {
  const OrbitPoint pt = cfg.point();
  const Trajectory cf = closed_form_trajectory(pt, cfg.t_end, cfg.dt);
  bool wrote = false;
  for (const auto& o : cfg.outputs) {
    if (o.kind != "csv" && o.kind != "compare") continue;
    const fs::path out = fs::path(o.path).is_absolute() ? fs::path(o.path) : fs::path(opt.out_dir) / o.path;
    write_atomically(out, o.kind == "compare" ? compare_csv(cf, integrate(pt, cfg.t_end, cfg.dt)) : trajectory_csv(cf));
    std::cout << "trajectory: " << out.string() << "\n";
    wrote = true;
  }
  if (!wrote) {
    const fs::path out = fs::path(opt.out_dir) / "trajectory.csv";
    write_atomically(out, trajectory_csv(cf));
    std::cout << "trajectory: " << out.string() << "\n";
  }
  return kOk;
}

int cmd_brackets(const Options& opt, const ScenarioConfig& cfg) {
  double max_diff = 0.0;
  const json report = brackets_report(cfg.point(), max_diff);
  const fs::path out = resolve(opt, cfg, {"brackets"}, "brackets.json");
  write_atomically(out, report.dump(2) + "\n");
  std::cout << "brackets: " << out.string() << "  max |analytic - fd| = " << max_diff << "\n";
  return max_diff < 1e-6 ? kOk : kFailure;
}

int cmd_table(const Options& opt, const ScenarioConfig& cfg) {
  const fs::path out = resolve(opt, cfg, {"table"}, "table.json");
  write_atomically(out, table_report(cfg).dump(2) + "\n");
  std::cout << "table: " << out.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: extended Galilei / Para-Galilei coadjoint orbits"};
  app.require_subcommand(1);
  Options opt;

  using Handler = int (*)(const Options&, const ScenarioConfig&);
  const std::pair<const char*, Handler> commands[] = {
      {"verify", cmd_verify}, {"simulate", cmd_simulate}, {"brackets", cmd_brackets}, {"table", cmd_table}};
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("config", opt.config, "scenario JSON")->required();
    sub->add_option("--seed", opt.seed, "override the config seed");
    sub->add_option("--out-dir", opt.out_dir, "directory for relative output paths");
    subs.emplace_back(sub, fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  ScenarioConfig cfg;
  try {
    cfg = load_config(opt.config);
    if (opt.seed) cfg.seed = *opt.seed;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  for (const auto& [sub, fn] : subs) {
    if (!sub->parsed()) continue;
    try {
      return fn(opt, cfg);
    } catch (const DegenerateOrbitPoint& e) {
      std::cerr << "DegenerateOrbitPoint: " << e.what() << "\n";
      return kFailure;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kFailure;
    }
  }
  return kConfigError;
}
