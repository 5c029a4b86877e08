#pragma once

#include "scenario.hpp"

#include "orbitkit/verify.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace orbitkit::cli {

inline constexpr int kSchemaVersion = 1;

/// Writes to a sibling temp file, then renames over the target.
inline void write_atomically(const std::filesystem::path& target, const std::string& content) {
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json vec_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

inline json mat_json(const Mat2& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

inline json point_json(const OrbitPoint& pt) {
  return {{"family", family_name(pt.family)},
          {"s", pt.s},
          {"alpha", pt.alpha},
          {"q", vec_json(pt.q)},
          {"mom", vec_json(pt.mom)},
          {"casimir", {{"m", pt.casimir.m}, {"h", pt.casimir.h}, {"intensity", pt.casimir.intensity}, {"U", pt.casimir.U}}}};
}

// ---------------------------------------------------------------------------
// simulate

inline constexpr const char* kCsvFields[] = {"s", "alpha", "q1", "q2", "mom1", "mom2", "H", "U", "dH", "dU"};

inline void append_sample(std::string& line, const TrajectorySample& smp) {
  const OrbitPoint& p = smp.pt;
  for (double v : {p.s, p.alpha, p.q.x(), p.q.y(), p.mom.x(), p.mom.y(), smp.H, smp.U, smp.dH, smp.dU}) {
    line += ',';
    line += fmt17(v);
  }
}

inline std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const char* f : kCsvFields) out += std::string(",") + f;
  out += '\n';
  for (const auto& smp : traj.samples) {
    std::string line = fmt17(smp.t);
    append_sample(line, smp);
    out += line + '\n';
  }
  return out;
}

/// Closed-form and RK4 columns side by side (suffixes _cf, _rk).
inline std::string compare_csv(const Trajectory& cf, const Trajectory& rk) {
  std::string out = "t";
  for (const char* suffix : {"_cf", "_rk"})
    for (const char* f : kCsvFields) out += std::string(",") + f + suffix;
  out += '\n';
  for (std::size_t i = 0; i < cf.samples.size(); ++i) {
    std::string line = fmt17(cf.samples[i].t);
    append_sample(line, cf.samples[i]);
    append_sample(line, rk.samples[i]);
    out += line + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

inline json suite_json(const verify::SuiteResult& r) {
  return {{"name", r.name},
          {"criterion", r.criterion},
          {"samples", r.samples},
          {"max_deviation", r.max_deviation},
          {"tolerance", r.tolerance},
          {"passed", r.passed},
          {"informational", r.informational}};
}

/// Checks on the configured point itself, added to the randomized suites.
inline std::vector<verify::SuiteResult> scenario_suites(const ScenarioConfig& cfg) {
  std::vector<verify::SuiteResult> out;
  auto add = [&out](std::string name, std::size_t n, double dev, double tol) {
    out.push_back({std::move(name), "scenario", n, dev, tol, dev < tol, false});
  };
  const OrbitPoint pt = cfg.point();
  double dev = 0.0;
  const auto table = bracket_table(pt);
  for (const auto& e : table) dev = std::max(dev, std::abs(poisson_bracket(e.left, e.right, pt) - e.value));
  add("scenario.brackets_vs_table", table.size(), dev, 1e-6);

  const Trajectory rk = integrate(pt, cfg.t_end, cfg.dt);
  dev = 0.0;
  for (const auto& s : rk.samples) dev = std::max(dev, verify::point_distance(s.pt, closed_form_flow(pt, s.t)));
  add("scenario.rk4_vs_closed_form", rk.samples.size(), dev, 1e-9);
  add("scenario.energy_drift", rk.samples.size(), rk.max_dH(), 1e-9);
  add("scenario.casimir_drift", rk.samples.size(), rk.max_casimir_drift(), 1e-9);
  return out;
}

// ---------------------------------------------------------------------------
// brackets

inline json brackets_report(const OrbitPoint& pt, double& max_diff) {
  json entries = json::object(), printed = json::object();
  max_diff = 0.0;
  for (const auto& e : bracket_table(pt)) {
    const double fd = poisson_bracket(e.left, e.right, pt);
    const double diff = std::abs(fd - e.value);
    max_diff = std::max(max_diff, diff);
    entries[e.name] = {{"analytic", e.value}, {"finite_difference", fd}, {"abs_diff", diff}};
  }
  for (const auto& e : printed_s_rows(pt)) {
    const double fd = poisson_bracket(e.left, e.right, pt);
    printed[e.name] = {{"analytic", e.value}, {"finite_difference", fd}, {"abs_diff", std::abs(fd - e.value)}};
  }
  return {{"schema_version", kSchemaVersion},
          {"command", "brackets"},
          {"family", family_name(pt.family)},
          {"point", point_json(pt)},
          {"brackets", entries},
          {"printed_s_rows", printed},
          {"max_abs_diff", max_diff},
          {"tolerance", 1e-6}};
}

// ---------------------------------------------------------------------------
// table

/// The side-by-side comparison for one family.
inline json table_column(const OrbitPoint& pt, double t_probe) {
  const bool para = is_para(pt.family);
  const Potentials pot = potentials(pt);
  const HamiltonianBreakdown hb = hamiltonian(pt);
  const FlowCoefficients fc = flow_coefficients(pt);
  const double m = pt.m();

  json brackets = json::object();
  for (const auto& e : bracket_table(pt)) brackets[e.name] = e.value;

  json fields = json::object(), correction = json::object(), newton = json::object();
  if (!para) {
    fields = {{"estar_bstar", pt.fields.estar_bstar}, {"G12", pot.Gupper(0, 1)}, {"Astar", vec_json(pot.Astar)}};
    correction = {{"G", mat_json(pot.Gupper)}};
    newton = {{"q_rhs", vec_json(pt.intensity_vector() / m)}, {"s_rhs", fc.N / m}};
  } else {
    fields = {{"eB", pt.fields.eB}, {"F12", pot.Flower(0, 1)}, {"A", vec_json(pot.A)}};
    correction = {{"F", mat_json(pot.Flower)}};
    newton = {{"I_rhs", vec_json(signed_omega2(pt) * pt.intensity_vector())},
              {"s_rhs", fc.N / m},
              {"compliance", hb.compliance}};
  }

  return {{"family", family_name(pt.family)},
          {"invariants",
           {{"m", pt.casimir.m}, {"h", pt.casimir.h}, {"intensity", pt.casimir.intensity}, {"U", pt.casimir.U}}},
          {"fields", fields},
          {"orbit_coordinates", {{"s", pt.s}, {"alpha", pt.alpha}, {"q", vec_json(pt.q)}, {"mom", vec_json(pt.mom)}}},
          {"canonical_coordinates", [&] {
             const Vec6 c = canonical_coords(pt);
             return json::array({c[0], c[1], c[2], c[3], c[4], c[5]});
           }()},
          {"symplectic_correction", correction},
          {"brackets", brackets},
          {"hamiltonian",
           {{"kinetic", hb.kinetic},
            {"potential", hb.potential},
            {"exotic", hb.exotic},
            {"total", hb.total},
            {"compliance", hb.compliance}}},
          {"potential_energy", hb.potential},
          {"flow", {{"K", fc.K}, {"N", fc.N}, {"E0", fc.E0}, {"P0", fc.P0}, {"t", t_probe}, {"K_of_t", fc.K_at(t_probe)}}},
          {"newton", newton}};
}

inline OrbitPoint default_point(Family f) {
  ScenarioConfig cfg;
  cfg.family = f;
  cfg.params.family = f;
  InitialPoint ip;
  ip.alpha = std::numbers::pi / 3.0;
  ip.q = {0.5, -0.25};
  ip.mom = {1.0, 0.5};
  cfg.initial = ip;
  return cfg.point();
}

/// Galilei next to the configured Para-Galilei sign (plus by default).
inline json table_report(const ScenarioConfig& cfg) {
  const Family para = is_para(cfg.family) ? cfg.family : Family::ParaGalileiPlus;
  const OrbitPoint gal = cfg.family == Family::Galilei && cfg.has_point() ? cfg.point() : default_point(Family::Galilei);
  const OrbitPoint par = is_para(cfg.family) && cfg.has_point() ? cfg.point() : default_point(para);
  return {{"schema_version", kSchemaVersion},
          {"command", "table"},
          {"galilei", table_column(gal, cfg.t_end)},
          {"paragalilei", table_column(par, cfg.t_end)}};
}

}  // namespace orbitkit::cli
