#pragma once

#include "orbitkit/orbitkit.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitkit::cli {

using nlohmann::json;

/// Malformed or inconsistent configuration (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputSpec {
  std::string kind;
  std::string path;
};

/// Orbit-point form of the initial state.
struct InitialPoint {
  double s = 0.0, alpha = 0.0, intensity = 1.0, U = 0.0;
  Vec2 q = Vec2::Zero(), mom = Vec2::Zero();
};

/// Coadjoint form of the initial state; f_or_I is f (Galilei) or I (Para).
struct CoadjointInit {
  double j = 0.0, E = 0.0;
  Vec2 k = Vec2::Zero(), p = Vec2::Zero(), f_or_I = Vec2::Zero();
};

struct ScenarioConfig {
  Family family = Family::Galilei;
  double m = 1.0;
  AlgebraParams params{};
  std::optional<InitialPoint> initial;
  std::optional<CoadjointInit> coadjoint;
  double t_end = 1.0;
  double dt = 0.1;
  std::uint64_t seed = 42;
  std::vector<OutputSpec> outputs;

  bool has_point() const { return initial || coadjoint; }

  FieldParams fields() const { return FieldParams::from_policy(m, params.omega); }

  /// Throws DegenerateOrbitPoint (ZeroIntensity) for an unusable point.
  OrbitPoint point() const {
    if (coadjoint) return from_coadjoint(dual(), fields());
    const InitialPoint& in = initial ? *initial : InitialPoint{};
    if (!(in.intensity > 0.0)) throw ZeroIntensity("initial.intensity must be positive");
    OrbitPoint pt{family};
    pt.s = in.s;
    pt.alpha = in.alpha;
    pt.q = in.q;
    pt.mom = in.mom;
    pt.casimir = {m, policy_h(params, m), in.intensity, in.U};
    pt.fields = fields();
    return pt;
  }

  CoadjointVector dual() const {
    if (!coadjoint) return to_coadjoint(point());
    const CoadjointInit& c = *coadjoint;
    CoadjointVector xi{family};
    xi.m = m;
    xi.h = policy_h(params, m);
    xi.j = c.j;
    xi.E = c.E;
    xi.k = c.k;
    xi.p = c.p;
    (is_para(family) ? xi.I : xi.f) = c.f_or_I;
    return xi;
  }

  std::optional<std::string> output_path(std::initializer_list<std::string_view> kinds) const {
    for (const auto& o : outputs)
      for (auto k : kinds)
        if (o.kind == k) return o.path;
    return std::nullopt;
  }
};

namespace detail {

inline const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError("missing field '" + where + key + "'");
  return obj.at(key);
}

inline double number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError("field '" + name + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("field '" + name + "' must be finite");
  return d;
}

inline double number_or(const json& obj, const std::string& key, const std::string& where, double dflt) {
  return obj.contains(key) ? number(obj.at(key), where + key) : dflt;
}

inline Vec2 vec2(const json& v, const std::string& name) {
  if (!v.is_array() || v.size() != 2) throw ConfigError("field '" + name + "' must be an array of 2 numbers");
  return {number(v[0], name + "[0]"), number(v[1], name + "[1]")};
}

inline Vec2 vec2_or(const json& obj, const std::string& key, const std::string& where) {
  return obj.contains(key) ? vec2(obj.at(key), where + key) : Vec2::Zero();
}

inline void positive(double v, const std::string& name) {
  if (!(v > 0.0)) throw ConfigError("field '" + name + "' must be > 0");
}

}  // namespace detail

inline ScenarioConfig parse_config(const json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig cfg;

  const json& fam = member(doc, "family", "");
  if (!fam.is_string()) throw ConfigError("field 'family' must be a string");
  try {
    cfg.family = parse_family(fam.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("field 'family': ") + e.what());
  }

  const json params = doc.value("params", json::object());
  if (!params.is_object()) throw ConfigError("field 'params' must be an object");
  cfg.m = number_or(params, "m", "params.", 1.0);
  cfg.params.family = cfg.family;
  cfg.params.omega = number_or(params, "omega", "params.", 1.0);
  cfg.params.c = number_or(params, "c", "params.", 1.0);
  positive(cfg.m, "params.m");
  positive(cfg.params.omega, "params.omega");
  positive(cfg.params.c, "params.c");
  if (params.contains("r")) {
    cfg.params.r = number(params.at("r"), "params.r");
    positive(cfg.params.r, "params.r");
    if (is_para(cfg.family) &&
        std::abs(cfg.params.c - cfg.params.omega * cfg.params.r) > 1e-12 * cfg.params.c)
      throw ConfigError("fields 'params.c', 'params.omega', 'params.r' must satisfy c = omega * r");
  } else {
    cfg.params.r = cfg.params.c / cfg.params.omega;
  }

  if (doc.contains("initial") && doc.contains("coadjoint"))
    throw ConfigError("fields 'initial' and 'coadjoint' are mutually exclusive");
  if (doc.contains("initial")) {
    const json& in = doc.at("initial");
    if (!in.is_object()) throw ConfigError("field 'initial' must be an object");
    InitialPoint ip;
    ip.s = number_or(in, "s", "initial.", 0.0);
    ip.alpha = number_or(in, "alpha", "initial.", 0.0);
    ip.q = vec2_or(in, "q", "initial.");
    ip.mom = vec2_or(in, "mom", "initial.");
    ip.intensity = number_or(in, "intensity", "initial.", 1.0);
    ip.U = number_or(in, "U", "initial.", 0.0);
    if (ip.intensity < 0.0) throw ConfigError("field 'initial.intensity' must be >= 0");
    cfg.initial = ip;
  }
  if (doc.contains("coadjoint")) {
    const json& co = doc.at("coadjoint");
    if (!co.is_object()) throw ConfigError("field 'coadjoint' must be an object");
    CoadjointInit ci;
    ci.j = number_or(co, "j", "coadjoint.", 0.0);
    ci.E = number_or(co, "E", "coadjoint.", 0.0);
    ci.k = vec2_or(co, "k", "coadjoint.");
    ci.p = vec2_or(co, "p", "coadjoint.");
    ci.f_or_I = vec2_or(co, "f_or_I", "coadjoint.");
    cfg.coadjoint = ci;
  }

  if (doc.contains("time")) {
    const json& t = doc.at("time");
    if (!t.is_object()) throw ConfigError("field 'time' must be an object");
    cfg.t_end = number_or(t, "t_end", "time.", cfg.t_end);
    cfg.dt = number_or(t, "dt", "time.", cfg.dt);
  }
  if (!(cfg.dt > 0.0)) throw ConfigError("field 'time.dt' must be > 0");
  if (!(cfg.t_end >= 0.0)) throw ConfigError("field 'time.t_end' must be >= 0");

  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0)
      throw ConfigError("field 'seed' must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }

  if (doc.contains("outputs")) {
    const json& outs = doc.at("outputs");
    if (!outs.is_array()) throw ConfigError("field 'outputs' must be an array");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const std::string where = "outputs[" + std::to_string(i) + "].";
      const json& kind = member(outs[i], "kind", where);
      const json& path = member(outs[i], "path", where);
      if (!kind.is_string() || !path.is_string())
        throw ConfigError("fields '" + where + "kind' and '" + where + "path' must be strings");
      cfg.outputs.push_back({kind.get<std::string>(), path.get<std::string>()});
    }
  }
  return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

}  // namespace orbitkit::cli
