#pragma once

#include "orbitkit/algebra.hpp"

namespace orbitkit {

/// g = exp(phi S + xi M) exp(aux . F|Pi) exp(x.P + t H) exp(v.K) exp(theta J).
/// aux is eta (Galilei) or l (Para-Galilei). theta is never reduced mod 2 pi.
struct ExtendedGroupElement {
  Family family = Family::Galilei;
  double theta = 0.0;
  Vec2 v = Vec2::Zero();
  Vec2 x = Vec2::Zero();
  double t = 0.0;
  Vec2 aux = Vec2::Zero();
  double xi = 0.0;
  double phi = 0.0;

  Eigen::Matrix<double, 10, 1> as_vector() const {
    Eigen::Matrix<double, 10, 1> out;
    out << theta, v, x, t, aux, xi, phi;
    return out;
  }
};

inline ExtendedGroupElement identity(Family family) { return ExtendedGroupElement{family}; }

inline ExtendedGroupElement multiply(const AlgebraParams& params, const ExtendedGroupElement& g1,
                                     const ExtendedGroupElement& g2) {
  require_same_family(g1.family, g2.family);
  require_same_family(params.family, g1.family);
  const Mat2 R = rotation(g1.theta);
  const Mat2 Rinv = rotation(-g1.theta);
  const double t1 = g1.t, t2 = g2.t;

  ExtendedGroupElement out{g1.family};
  out.theta = g1.theta + g2.theta;
  out.t = t1 + t2;
  out.xi = g1.xi + g2.xi;
  out.phi = g1.phi + g2.phi;

  if (!is_para(g1.family)) {
    out.v = R * g2.v + g1.v;
    out.x = R * g2.x + g1.v * t2 + g1.x;
    out.aux = R * g2.aux + g1.aux + 0.5 * ((g1.x - g1.v * t1) * t2 - t1 * (R * g2.x));
    out.xi += (Rinv * g1.v).dot(g2.x) + 0.5 * g1.v.squaredNorm() * t2;
    out.phi += cross2(Rinv * g1.v, g2.v) / (2.0 * params.c * params.c);
  } else {
    const double w2 = para_sign(g1.family) * params.omega * params.omega;
    out.v = R * g2.v + g1.v + w2 * g1.x * t2;
    out.x = R * g2.x + g1.x;
    out.aux = g1.aux + R * g2.aux + 0.5 * ((g1.v - w2 * g1.x * t1) * t2 - t1 * (R * g2.v));
    out.xi += -(Rinv * g1.x).dot(g2.v) - 0.5 * w2 * g1.x.squaredNorm() * t2;
    out.phi += cross2(Rinv * g1.x, g2.x) / (2.0 * params.r * params.r);
  }
  return out;
}

/// Closed-form inverse: solve the base law first, then cancel the cocycles.
inline ExtendedGroupElement inverse(const AlgebraParams& params, const ExtendedGroupElement& g) {
  const Mat2 Rinv = rotation(-g.theta);
  ExtendedGroupElement h{g.family};
  h.theta = -g.theta;
  h.t = -g.t;
  if (!is_para(g.family)) {
    h.v = -(Rinv * g.v);
    h.x = -(Rinv * (g.x - g.v * g.t));
  } else {
    const double w2 = para_sign(g.family) * params.omega * params.omega;
    h.x = -(Rinv * g.x);
    h.v = -(Rinv * (g.v - w2 * g.x * g.t));
  }
  // g * h with h's central/aux parts zero leaves only g's parts plus cocycles;
  // those enter linearly, so negate them.
  const ExtendedGroupElement partial = multiply(params, g, h);
  h.aux = -(Rinv * partial.aux);
  h.xi = -partial.xi;
  h.phi = -partial.phi;
  return h;
}

/// Adjoint action of the quotient group on the extended algebra.
inline AlgebraElement adjoint_action(const AlgebraParams& params, const ExtendedGroupElement& g,
                                     const AlgebraElement& X) {
  require_same_family(g.family, X.family);
  require_same_family(params.family, g.family);
  const Mat2 R = rotation(g.theta);
  const Mat2 Rinv = rotation(-g.theta);
  const double dth = X.d_theta(), dt = X.d_t();
  const Vec2 dv = X.d_v(), dx = X.d_x(), da = X.d_aux();
  const double t = g.t;

  AlgebraElement out{X.family};
  out.coeffs[J] = dth;
  out.coeffs[H] = dt;
  if (!is_para(g.family)) {
    const double c2 = params.c * params.c;
    out.set_v(R * dv + eps_vec(g.v) * dth);
    out.set_x(R * dx + g.v * dt + eps_vec(g.x - g.v * t) * dth - t * (R * dv));
    out.set_aux(R * da - t * (R * dx) + (g.x - g.v * t) * dt +
                eps_vec(g.aux - g.x * t / 2.0 + g.v * t * t / 2.0) * dth + t * t / 2.0 * (R * dv));
    out.coeffs[M] = X.d_xi() + (Rinv * g.v).dot(dx) - (Rinv * g.x).dot(dv) +
                    0.5 * g.v.squaredNorm() * dt + cross2(g.v, g.x) * dth;
    out.coeffs[S] = X.d_phi() + cross2(Rinv * g.v, dv) / c2 - g.v.squaredNorm() / (2.0 * c2) * dth;
  } else {
    const double w2 = para_sign(g.family) * params.omega * params.omega;
    const double r2 = params.r * params.r;
    const Vec2 vv = g.v - w2 * g.x * t;
    out.set_x(R * dx + eps_vec(g.x) * dth);
    out.set_v(R * dv + w2 * g.x * dt + eps_vec(vv) * dth - w2 * t * (R * dx));
    out.set_aux(R * da - t * (R * dv) + w2 * t * t / 2.0 * (R * dx) + vv * dt +
                eps_vec(g.aux - t / 2.0 * vv) * dth);
    out.coeffs[M] = X.d_xi() - (Rinv * g.x).dot(dv) + (Rinv * g.v).dot(dx) -
                    0.5 * w2 * g.x.squaredNorm() * dt + cross2(g.v, g.x) * dth;
    out.coeffs[S] = X.d_phi() + cross2(Rinv * g.x, dx) / r2 - g.x.squaredNorm() / (2.0 * r2) * dth;
  }
  return out;
}

}  // namespace orbitkit
