#pragma once

#include "orbitkit/orbit.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace orbitkit {

/// K*, N* (Galilei) or K, N (Para-Galilei); ds/dt = K(t)/m with K(t) = K + N t.
struct FlowCoefficients {
  double K = 0.0;
  double N = 0.0;
  double E0 = 0.0;  // K / m
  double P0 = 0.0;  // N / m

  double K_at(double t) const { return K + N * t; }
};

inline double signed_omega2(const OrbitPoint& pt) {
  return para_sign(pt.family) * pt.fields.omega * pt.fields.omega;
}

/// Galilei:      K* = m f x q - e*B* m p.f,   N* = f x p - e*B* m f^2
/// Para-Galilei: K  = I x p - eB p.q,        N  = +-m w^2 q x p - eB p^2 / m
inline FlowCoefficients flow_coefficients(const OrbitPoint& pt) {
  const double m = pt.m();
  const Vec2 w = pt.intensity_vector();
  FlowCoefficients fc;
  if (!is_para(pt.family)) {
    const double g = pt.fields.estar_bstar * m;
    fc.K = m * cross2(w, pt.q) - g * pt.mom.dot(w);
    fc.N = cross2(w, pt.mom) - g * w.squaredNorm();
  } else {
    const double eB = pt.fields.eB;
    fc.K = cross2(pt.mom, w) - eB * w.dot(pt.q);
    fc.N = signed_omega2(pt) * m * cross2(pt.q, w) - eB * w.squaredNorm() / m;
  }
  fc.E0 = fc.K / m;
  fc.P0 = fc.N / m;
  return fc;
}

struct HamiltonianBreakdown {
  double kinetic = 0.0;
  double potential = 0.0;
  double exotic = 0.0;
  double total = 0.0;
  double compliance = 0.0;  // +-1/(m w^2); 0 for Galilei
};

/// H = T + V + exotic, with the intensity vector and K frozen at `ref`
/// (defaults to pt itself):
///   Galilei:      T = p^2/2m,  V = -f.q - (K*/m) alpha,         exotic = e*B* p x f
///   Para-Galilei: T = I.p/m,   V = -+m w^2 q^2/2 - (K/m) alpha, exotic = (eB/m) q x p
inline HamiltonianBreakdown hamiltonian(const OrbitPoint& pt,
                                        const std::optional<OrbitPoint>& ref = std::nullopt) {
  const OrbitPoint& r = ref ? *ref : pt;
  require_same_family(pt.family, r.family);
  const double m = pt.m();
  const Vec2 w = r.intensity_vector();
  const double K = flow_coefficients(r).K;
  HamiltonianBreakdown hb;
  if (!is_para(pt.family)) {
    hb.kinetic = pt.mom.squaredNorm() / (2.0 * m);
    hb.potential = -w.dot(pt.q) - K / m * pt.alpha;
    hb.exotic = pt.fields.estar_bstar * cross2(pt.mom, w);
  } else {
    const double w2 = signed_omega2(pt);
    hb.kinetic = pt.mom.dot(w) / m;
    hb.potential = -0.5 * w2 * m * pt.q.squaredNorm() - K / m * pt.alpha;
    hb.exotic = pt.fields.eB / m * cross2(pt.q, w);
    hb.compliance = 1.0 / (m * w2);
  }
  hb.total = hb.kinetic + hb.potential + hb.exotic;
  return hb;
}

/// H as a phase function, frozen at `ref`.
inline PhaseFunction hamiltonian_function(const OrbitPoint& ref) {
  return [ref](const Coords& y) { return hamiltonian(ref.with_coords(y), ref).total; };
}

/// E - U on the chart (intensity vector follows alpha). Generates the same
/// vector field as the frozen H at every point.
inline PhaseFunction energy_function(const OrbitPoint& base) {
  return [base](const Coords& y) {
    const OrbitPoint pt = base.with_coords(y);
    return to_coadjoint(pt).E - pt.casimir.U;
  };
}

/// (ds, dalpha, dq, dmom)/dt = (K/m, 0, p/m, f) or (K/m, 0, p/m, +-m w^2 q).
inline Vec6 hamiltonian_vector_field(const OrbitPoint& pt) {
  const double m = pt.m();
  const FlowCoefficients fc = flow_coefficients(pt);
  Vec6 out;
  if (!is_para(pt.family)) {
    const Vec2 qd = pt.mom / m, pd = pt.intensity_vector();
    out << fc.K / m, 0.0, qd.x(), qd.y(), pd.x(), pd.y();
  } else {
    const Vec2 qd = pt.intensity_vector() / m, Id = signed_omega2(pt) * m * pt.q;
    out << fc.K / m, 0.0, qd.x(), qd.y(), Id.x(), Id.y();
  }
  return out;
}

/// Exact flow; coefficients taken at the initial point.
inline OrbitPoint closed_form_flow(const OrbitPoint& pt, double t) {
  const double m = pt.m();
  const Vec2 w = pt.intensity_vector();
  const FlowCoefficients fc = flow_coefficients(pt);
  OrbitPoint out = pt;
  out.s = pt.s + fc.K / m * t + fc.N / m * t * t / 2.0;
  if (!is_para(pt.family)) {
    out.q = pt.q + pt.mom / m * t + w / m * t * t / 2.0;
    out.mom = pt.mom + w * t;
  } else {
    const double w2 = signed_omega2(pt);
    out.q = pt.q + w / m * t;
    out.mom = pt.mom + w2 * m * pt.q * t + w2 * w * t * t / 2.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trajectories

struct TrajectorySample {
  double t = 0.0;
  OrbitPoint pt;
  double H = 0.0;
  double U = 0.0;
  double dH = 0.0;          // |H(t) - H(0)|
  double dU = 0.0;          // |U(t) - U(0)|
  double dIntensity = 0.0;  // | |f|(t) - |f|(0) |  (resp. |p|)
};

struct Trajectory {
  std::vector<TrajectorySample> samples;

  double max_dH() const {
    double d = 0.0;
    for (const auto& s : samples) d = std::max(d, s.dH);
    return d;
  }
  double max_casimir_drift() const {
    double d = 0.0;
    for (const auto& s : samples) d = std::max({d, s.dU, s.dIntensity});
    return d;
  }
};

namespace detail {

/// The flow is generated by time translations, under which E is unchanged;
/// rebuild the dual point from the chart with E fixed and recompute U.
inline TrajectorySample annotate(double t, const OrbitPoint& pt, const OrbitPoint& start,
                                 const CoadjointVector& xi0, const CasimirSet& cs0, double H0) {
  TrajectorySample smp{t, pt};
  smp.H = hamiltonian(pt, start).total;
  smp.dH = std::abs(smp.H - H0);
  CoadjointVector xi = to_coadjoint(pt);
  xi.E = xi0.E;
  const CasimirSet cs = casimirs(xi, pt.fields);
  smp.U = cs.U;
  smp.dU = std::abs(cs.U - cs0.U);
  smp.dIntensity = std::abs(cs.intensity - cs0.intensity);
  return smp;
}

inline int step_count(double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidParameter("dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InvalidParameter("t_end must be non-negative");
  return static_cast<int>(std::ceil(t_end / dt - 1e-9));
}

inline double sample_time(int k, int n, double t_end, double dt) {
  return k == n ? t_end : k * dt;
}

}  // namespace detail

/// Fixed-step classical RK4 on the Hamiltonian vector field.
inline Trajectory integrate(const OrbitPoint& pt, double t_end, double dt) {
  const int n = detail::step_count(t_end, dt);
  const CoadjointVector xi0 = to_coadjoint(pt);
  const CasimirSet cs0 = casimirs(xi0, pt.fields);
  const double H0 = hamiltonian(pt).total;
  auto field = [&pt](const Vec6& y) { return hamiltonian_vector_field(pt.with_coords(y)); };

  Trajectory traj;
  traj.samples.reserve(n + 1);
  traj.samples.push_back(detail::annotate(0.0, pt, pt, xi0, cs0, H0));
  Vec6 y = pt.coord_vector();
  double t = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double t_next = detail::sample_time(k, n, t_end, dt);
    const double h = t_next - t;
    const Vec6 k1 = field(y);
    const Vec6 k2 = field(y + 0.5 * h * k1);
    const Vec6 k3 = field(y + 0.5 * h * k2);
    const Vec6 k4 = field(y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t_next;
    traj.samples.push_back(detail::annotate(t, pt.with_coords(y), pt, xi0, cs0, H0));
  }
  return traj;
}

/// Closed-form flow sampled on the same grid as integrate().
inline Trajectory closed_form_trajectory(const OrbitPoint& pt, double t_end, double dt) {
  const int n = detail::step_count(t_end, dt);
  const CoadjointVector xi0 = to_coadjoint(pt);
  const CasimirSet cs0 = casimirs(xi0, pt.fields);
  const double H0 = hamiltonian(pt).total;
  Trajectory traj;
  traj.samples.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double t = detail::sample_time(k, n, t_end, dt);
    traj.samples.push_back(detail::annotate(t, closed_form_flow(pt, t), pt, xi0, cs0, H0));
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Realization of the full group on the chart

inline OrbitPoint symplectic_realization(const ExtendedGroupElement& g, const OrbitPoint& pt) {
  require_same_family(g.family, pt.family);
  const Mat2 R = rotation(g.theta);
  const double m = pt.m(), t = g.t;
  const Vec2 Rw = R * pt.intensity_vector();
  const FlowCoefficients fc = flow_coefficients(pt);

  OrbitPoint out = pt;
  out.alpha = pt.alpha + g.theta;
  const double s_flow = pt.s + fc.K / m * t + fc.N / m * t * t / 2.0;
  if (!is_para(pt.family)) {
    const Vec2 Rp = R * pt.mom;
    out.q = R * pt.q + (Rp - m * g.v) * t / m + Rw * t * t / (2.0 * m) + g.x +
            pt.fields.estar_bstar * m * eps_vec(g.v);
    out.mom = Rp + Rw * t - m * g.v;
    out.s = s_flow + cross2(g.aux - g.x * t / 2.0 + g.v * t * t / 2.0, Rw);
  } else {
    const double w2 = signed_omega2(pt);
    const Vec2 Rq = R * pt.q;
    out.q = Rq + Rw * t / m + g.x;
    out.mom = R * pt.mom + w2 * m * (Rq + g.x) * t + w2 * Rw * t * t / 2.0 +
              pt.fields.eB * eps_vec(g.x) - m * g.v;
    out.s = s_flow + cross2(g.aux - g.v * t / 2.0 + w2 * t * t * g.x / 2.0, Rw);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Newton-law checks

struct NewtonCheck {
  std::string name;
  Vec2 expected = Vec2::Zero();  // second component unused for scalar checks
  double max_deviation = 0.0;
};

struct NewtonReport {
  std::size_t samples = 0;
  double spacing = 0.0;
  std::vector<NewtonCheck> checks;

  double max_deviation() const {
    double d = 0.0;
    for (const auto& c : checks) d = std::max(d, c.max_deviation);
    return d;
  }
};

/// Central differences on a uniformly sampled trajectory:
///   Galilei:      d2q/dt2 = f/m,         d2s/dt2 = N*/m
///   Para-Galilei: d2I/dt2 = +-w^2 p,     d2s/dt2 = N/m,   dq/dt = C d2I/dt2
inline NewtonReport newton_check(const Trajectory& traj) {
  const auto& S = traj.samples;
  if (S.size() < 3) throw InvalidParameter("newton_check needs at least 3 samples");
  const double h = S[1].t - S[0].t;
  for (std::size_t i = 1; i < S.size(); ++i) {
    const double hi = S[i].t - S[i - 1].t;
    if (!(hi > 0.0) || std::abs(hi - h) > 1e-9 * std::max(1.0, h))
      throw InvalidParameter("newton_check needs uniform sampling");
  }
  const OrbitPoint& p0 = S.front().pt;
  const double m = p0.m();
  const Vec2 w = p0.intensity_vector();
  const FlowCoefficients fc = flow_coefficients(p0);
  const bool para = is_para(p0.family);

  NewtonCheck vec_check{para ? "d2I/dt2" : "d2q/dt2", para ? Vec2(signed_omega2(p0) * w) : Vec2(w / m)};
  NewtonCheck s_check{"d2s/dt2", Vec2(fc.N / m, 0.0)};
  NewtonCheck comp_check{"dq/dt - C d2I/dt2", Vec2::Zero()};
  const double C = para ? hamiltonian(p0).compliance : 0.0;

  for (std::size_t i = 1; i + 1 < S.size(); ++i) {
    const OrbitPoint &a = S[i - 1].pt, &b = S[i].pt, &c = S[i + 1].pt;
    const double s2 = (c.s - 2.0 * b.s + a.s) / (h * h);
    s_check.max_deviation = std::max(s_check.max_deviation, std::abs(s2 - s_check.expected.x()));
    const Vec2 v2 = para ? Vec2((c.mom - 2.0 * b.mom + a.mom) / (h * h))
                         : Vec2((c.q - 2.0 * b.q + a.q) / (h * h));
    vec_check.max_deviation =
        std::max(vec_check.max_deviation, (v2 - vec_check.expected).cwiseAbs().maxCoeff());
    if (para) {
      const Vec2 qd = (c.q - a.q) / (2.0 * h);
      comp_check.max_deviation =
          std::max(comp_check.max_deviation, (qd - C * v2).cwiseAbs().maxCoeff());
    }
  }
  NewtonReport rep{S.size(), h, {vec_check, s_check}};
  if (para) rep.checks.push_back(comp_check);
  return rep;
}

}  // namespace orbitkit
