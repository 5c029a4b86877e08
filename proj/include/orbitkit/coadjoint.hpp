#pragma once

#include "orbitkit/algebra.hpp"
#include "orbitkit/dual.hpp"
#include "orbitkit/groups.hpp"

#include <Eigen/LU>

#include <array>
#include <string_view>

namespace orbitkit {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Only the products e*B* and eB are observable, so they are stored as such.
struct FieldParams {
  double estar_bstar = 1.0;  // M^-1 T
  double eB = 1.0;           // M T^-1
  double omega = 1.0;

  /// e*B* = 1/(m omega), eB = m omega.
  static FieldParams from_policy(double m, double omega) {
    if (!(m > 0.0)) throw InvalidParameter("m must be positive");
    if (!(omega > 0.0)) throw InvalidParameter("omega must be positive");
    return {1.0 / (m * omega), m * omega, omega};
  }
};

/// h = m c^2 / omega. With c = omega r this also gives h / r^2 = eB.
inline double policy_h(const AlgebraParams& params, double m) {
  return m * params.c * params.c / params.omega;
}

/// Coadjoint action of the quotient group.
inline CoadjointVector coadjoint_action(const AlgebraParams& params, const ExtendedGroupElement& g,
                                        const CoadjointVector& xi) {
  require_same_family(g.family, xi.family);
  require_same_family(params.family, g.family);
  const Mat2 R = rotation(g.theta);
  const double m = xi.m, h = xi.h, t = g.t;
  const Vec2 &v = g.v, &x = g.x;

  CoadjointVector out = xi;
  if (!is_para(xi.family)) {
    const Vec2 Rp = R * xi.p, Rf = R * xi.f, Rk = R * xi.k;
    const double hc2 = h / (params.c * params.c);
    out.f = Rf;
    out.p = Rp + t * Rf - m * v;
    out.k = Rk + t * Rp + t * t / 2.0 * Rf + m * (x - v * t) + hc2 * eps_vec(v);
    out.E = xi.E - v.dot(Rp) - x.dot(Rf) + 0.5 * m * v.squaredNorm();
    out.j = xi.j + cross2(x, Rp) + cross2(v, Rk) + cross2(g.aux, Rf) + cross2(x * t / 2.0, Rf) +
            m * cross2(v, x) - 0.5 * hc2 * v.squaredNorm();
  } else {
    const double w2 = para_sign(xi.family) * params.omega * params.omega;
    const Vec2 Rp = R * xi.p, RI = R * xi.I, Rk = R * xi.k;
    const double hr2 = h / (params.r * params.r);
    out.p = Rp;
    out.k = Rk + t * Rp + m * x;
    out.I = RI + w2 * t * Rk + w2 * t * t / 2.0 * Rp + hr2 * eps_vec(x) - m * (v - w2 * x * t);
    out.E = xi.E - w2 * x.dot(Rk) - v.dot(Rp) - 0.5 * w2 * m * x.squaredNorm();
    out.j = xi.j + cross2(x, RI) + cross2(v, Rk) + cross2(g.aux, Rp) + cross2(v * t / 2.0, Rp) +
            m * cross2(v, x) - 0.5 * hr2 * x.squaredNorm();
  }
  return out;
}

struct CasimirSet {
  double m = 0.0;
  double h = 0.0;
  double intensity = 0.0;  // |f| or |p|
  double U = 0.0;          // internal energy (U or U+-)
};

/// Galilei:      U  = E - p^2/2m + f.q + e*B* f x p
/// Para-Galilei: U+- = E +- m w^2 q^2/2 - p.I/m + (eB/m) p x q
inline CasimirSet casimirs(const CoadjointVector& xi, const FieldParams& fp) {
  if (!(xi.m > 0.0)) throw InvalidParameter("casimirs: m must be positive");
  const double m = xi.m;
  const Vec2 q = xi.q();
  CasimirSet cs{m, xi.h, 0.0, 0.0};
  if (!is_para(xi.family)) {
    cs.intensity = xi.f.norm();
    cs.U = xi.E - xi.p.squaredNorm() / (2.0 * m) + xi.f.dot(q) + fp.estar_bstar * cross2(xi.f, xi.p);
  } else {
    const double w2 = para_sign(xi.family) * fp.omega * fp.omega;
    cs.intensity = xi.p.norm();
    cs.U = xi.E + 0.5 * w2 * m * q.squaredNorm() - xi.p.dot(xi.I) / m + fp.eB / m * cross2(xi.p, q);
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Kirillov matrix

using Basis6 = std::array<int, 6>;

/// (J, F1, K1, P1, K2, P2) for Galilei and (J, Pi1, K1, P1, K2, P2) for
/// Para-Galilei; both are the same slots of the 10-element basis.
inline constexpr Basis6 kOrbitBasis{J, Aux1, K1, P1, K2, P2};

struct KirillovMatrix {
  Family family = Family::Galilei;
  std::array<std::string_view, 6> basis6{};
  Mat6 entries = Mat6::Zero();
};

/// Omega_ab = <xi, [e_a, e_b]>.
inline KirillovMatrix kirillov_matrix(const StructureConstants& C, const CoadjointVector& xi,
                                      const Basis6& basis6 = kOrbitBasis) {
  require_same_family(C.family(), xi.family);
  KirillovMatrix out{xi.family};
  for (int a = 0; a < 6; ++a) {
    out.basis6[a] = C.labels()[basis6[a]];
    for (int b = a + 1; b < 6; ++b) {
      const auto ea = AlgebraElement::basis(xi.family, basis6[a]);
      const auto eb = AlgebraElement::basis(xi.family, basis6[b]);
      const double w = pairing(xi, bracket(C, ea, eb));
      out.entries(a, b) = w;
      out.entries(b, a) = -w;
    }
  }
  return out;
}

/// Numeric inverse. The pivot Omega(0,1) is f sin(alpha) resp. p sin(alpha).
inline Mat6 invert_kirillov(const KirillovMatrix& Om, double tol = 1e-9) {
  if (std::abs(Om.entries(0, 1)) < tol)
    throw DegenerateOrbitPoint("Kirillov matrix singular: |intensity * sin(alpha)| below tolerance");
  Eigen::FullPivLU<Mat6> lu(Om.entries);
  if (!lu.isInvertible()) throw DegenerateOrbitPoint("Kirillov matrix not invertible");
  return lu.inverse();
}

/// The printed orbit matrix, with q = k/m and the field products from fp.
inline Mat6 closed_form_kirillov(const CoadjointVector& xi, const FieldParams& fp) {
  const double m = xi.m;
  const Vec2 q = xi.q();
  Mat6 Om = Mat6::Zero();
  if (!is_para(xi.family)) {
    const double fs = xi.f.y(), g = fp.estar_bstar * m * m;
    const Vec2& p = xi.p;
    Om << 0, fs, m * q.y(), p.y(), -m * q.x(), -p.x(),
        -fs, 0, 0, 0, 0, 0,
        -m * q.y(), 0, 0, m, g, 0,
        -p.y(), 0, -m, 0, 0, 0,
        m * q.x(), 0, -g, 0, 0, m,
        p.x(), 0, 0, 0, -m, 0;
  } else {
    const double ps = xi.p.y(), eB = fp.eB;
    const Vec2& I = xi.I;
    Om << 0, ps, m * q.y(), I.y(), -m * q.x(), -I.x(),
        -ps, 0, 0, 0, 0, 0,
        -m * q.y(), 0, 0, m, 0, 0,
        -I.y(), 0, -m, 0, 0, eB,
        m * q.x(), 0, 0, 0, 0, m,
        I.x(), 0, 0, -eB, -m, 0;
  }
  return Om;
}

/// The printed inverse orbit matrix.
inline Mat6 closed_form_inverse(const CoadjointVector& xi, const FieldParams& fp, double tol = 1e-9) {
  const double m = xi.m;
  const Vec2 q = xi.q();
  const double piv = is_para(xi.family) ? xi.p.y() : xi.f.y();
  if (std::abs(piv) < tol)
    throw DegenerateOrbitPoint("closed-form inverse singular: |intensity * sin(alpha)| below tolerance");
  Mat6 Oi = Mat6::Zero();
  if (!is_para(xi.family)) {
    const double fs = piv, e = fp.estar_bstar;
    const Vec2& p = xi.p;
    Oi << 0, -1, 0, 0, 0, 0,
        1, 0, -p.y() / m, q.y() - e * p.x(), p.x() / m, -q.x() - e * p.y(),
        0, p.y() / m, 0, -fs / m, 0, 0,
        0, -q.y() + e * p.x(), fs / m, 0, 0, e * fs,
        0, -p.x() / m, 0, 0, 0, -fs / m,
        0, q.x() + e * p.y(), 0, -e * fs, fs / m, 0;
  } else {
    const double ps = piv, eB = fp.eB;
    const Vec2& I = xi.I;
    Oi << 0, -1, 0, 0, 0, 0,
        1, 0, -I.y() / m - eB * q.x() / m, q.y(), I.x() / m - eB * q.y() / m, -q.x(),
        0, I.y() / m + eB * q.x() / m, 0, -ps / m, eB * ps / (m * m), 0,
        0, -q.y(), ps / m, 0, 0, 0,
        0, -I.x() / m + eB * q.y() / m, -eB * ps / (m * m), 0, 0, -ps / m,
        0, q.x(), 0, 0, ps / m, 0;
  }
  return Oi / piv;
}

}  // namespace orbitkit
