#pragma once

#include "orbitkit/coadjoint.hpp"

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace orbitkit {

/// Chart coordinates in storage order.
enum Coord : int { kS = 0, kAlpha, kQ1, kQ2, kMom1, kMom2 };
using Coords = std::array<double, 6>;

inline constexpr std::array<const char*, 6> kCoordNames{"s", "alpha", "q1", "q2", "mom1", "mom2"};

/// Point of the orbit chart. mom is p (Galilei) or I (Para-Galilei); the
/// intensity vector is f (Galilei) or p (Para-Galilei).
struct OrbitPoint {
  Family family = Family::Galilei;
  double s = 0.0;
  double alpha = 0.0;
  Vec2 q = Vec2::Zero();
  Vec2 mom = Vec2::Zero();
  CasimirSet casimir{};
  FieldParams fields{};

  Vec2 intensity_vector() const { return polar(casimir.intensity, alpha); }
  double m() const { return casimir.m; }

  Coords coords() const { return {s, alpha, q.x(), q.y(), mom.x(), mom.y()}; }
  Vec6 coord_vector() const {
    Vec6 y;
    y << s, alpha, q.x(), q.y(), mom.x(), mom.y();
    return y;
  }

  OrbitPoint with_coords(const Coords& y) const {
    OrbitPoint out = *this;
    out.s = y[kS];
    out.alpha = y[kAlpha];
    out.q = {y[kQ1], y[kQ2]};
    out.mom = {y[kMom1], y[kMom2]};
    return out;
  }
  OrbitPoint with_coords(const Vec6& y) const {
    return with_coords(Coords{y[0], y[1], y[2], y[3], y[4], y[5]});
  }
};

/// Charge-weighted potentials and noncommutativity tensors.
struct Potentials {
  Vec2 Astar = Vec2::Zero();  // e* A* = 1/2 e*B* x p  (Galilei)
  Vec2 A = Vec2::Zero();      // e A = 1/2 eB x q      (Para-Galilei)
  Mat2 Gupper = Mat2::Zero(); // e*B* eps^{ij}
  Mat2 Flower = Mat2::Zero(); // eB eps_{ij}
};

inline Potentials potentials(const OrbitPoint& pt) {
  Potentials out;
  if (!is_para(pt.family)) {
    out.Astar = 0.5 * field_cross(pt.fields.estar_bstar, pt.mom);
    out.Gupper = pt.fields.estar_bstar * eps_upper();
  } else {
    out.A = 0.5 * field_cross(pt.fields.eB, pt.q);
    out.Flower = pt.fields.eB * eps_lower();
  }
  return out;
}

/// Galilei:      s = j + p x q - e*B* p^2 / 2
/// Para-Galilei: s = j - q x I - eB q^2 / 2
inline OrbitPoint from_coadjoint(const CoadjointVector& xi, const FieldParams& fp) {
  if (!(xi.m > 0.0)) throw InvalidParameter("from_coadjoint: m must be positive");
  OrbitPoint pt{xi.family};
  pt.fields = fp;
  pt.casimir = casimirs(xi, fp);
  if (pt.casimir.intensity == 0.0)
    throw ZeroIntensity(is_para(xi.family) ? "momentum intensity |p| is zero"
                                           : "force intensity |f| is zero");
  pt.q = xi.q();
  const Vec2& dir = xi.aux_dual();
  pt.alpha = std::atan2(dir.y(), dir.x());
  if (!is_para(xi.family)) {
    pt.mom = xi.p;
    pt.s = xi.j + cross2(xi.p, pt.q) - 0.5 * fp.estar_bstar * xi.p.squaredNorm();
  } else {
    pt.mom = xi.I;
    pt.s = xi.j - cross2(pt.q, xi.I) - 0.5 * fp.eB * pt.q.squaredNorm();
  }
  return pt;
}

inline CoadjointVector to_coadjoint(const OrbitPoint& pt) {
  if (!(pt.casimir.intensity > 0.0)) throw ZeroIntensity("to_coadjoint: zero intensity");
  const double m = pt.m();
  const FieldParams& fp = pt.fields;
  CoadjointVector xi{pt.family};
  xi.m = m;
  xi.h = pt.casimir.h;
  xi.k = m * pt.q;
  const Vec2 q = pt.q;
  if (!is_para(pt.family)) {
    xi.f = pt.intensity_vector();
    xi.p = pt.mom;
    xi.j = pt.s - cross2(xi.p, q) + 0.5 * fp.estar_bstar * xi.p.squaredNorm();
    xi.E = pt.casimir.U + xi.p.squaredNorm() / (2.0 * m) - xi.f.dot(q) -
           fp.estar_bstar * cross2(xi.f, xi.p);
  } else {
    const double w2 = para_sign(pt.family) * fp.omega * fp.omega;
    xi.p = pt.intensity_vector();
    xi.I = pt.mom;
    xi.j = pt.s + cross2(q, xi.I) + 0.5 * fp.eB * q.squaredNorm();
    xi.E = pt.casimir.U - 0.5 * w2 * m * q.squaredNorm() + xi.p.dot(xi.I) / m -
           fp.eB / m * cross2(xi.p, q);
  }
  return xi;
}

/// Constant bracket matrix of the chart: {y_a, y_b} = Pi(a, b).
inline Mat6 bracket_matrix(const OrbitPoint& pt) {
  Mat6 P = Mat6::Zero();
  P(kS, kAlpha) = 1.0;
  P(kAlpha, kS) = -1.0;
  for (int i = 0; i < 2; ++i) {
    P(kMom1 + i, kQ1 + i) = 1.0;
    P(kQ1 + i, kMom1 + i) = -1.0;
  }
  if (!is_para(pt.family)) {
    P(kQ1, kQ2) = -pt.fields.estar_bstar;
    P(kQ2, kQ1) = pt.fields.estar_bstar;
  } else {
    P(kMom1, kMom2) = -pt.fields.eB;
    P(kMom2, kMom1) = pt.fields.eB;
  }
  return P;
}

using PhaseFunction = std::function<double(const Coords&)>;

inline PhaseFunction coordinate_function(int index) {
  return [index](const Coords& y) { return y[index]; };
}

/// Central-difference gradient, step 1e-4 * max(1, |y_a|).
inline Vec6 gradient(const PhaseFunction& F, const Coords& y) {
  Vec6 g;
  for (int a = 0; a < 6; ++a) {
    const double h = 1e-4 * std::max(1.0, std::abs(y[a]));
    Coords yp = y, ym = y;
    yp[a] += h;
    ym[a] -= h;
    g[a] = (F(yp) - F(ym)) / (2.0 * h);
  }
  return g;
}

/// {F, G} = dF/ds dG/dalpha - dF/dalpha dG/ds + dF/dmom_i dG/dq^i - dF/dq^i dG/dmom_i
///          - e*B* eps^{ij} dF/dq^i dG/dq^j    (Galilei)
///          - eB eps_{ij} dF/dI_i dG/dI_j      (Para-Galilei)
inline double poisson_bracket(const PhaseFunction& F, const PhaseFunction& G, const OrbitPoint& pt) {
  const Coords y = pt.coords();
  return gradient(F, y).dot(bracket_matrix(pt) * gradient(G, y));
}

/// Functions on the chart that are not coordinates.
inline PhaseFunction angular_momentum_function(const OrbitPoint& pt) {
  const OrbitPoint base = pt;
  return [base](const Coords& y) { return to_coadjoint(base.with_coords(y)).j; };
}

inline std::array<PhaseFunction, 2> potential_functions(const OrbitPoint& pt) {
  const OrbitPoint base = pt;
  std::array<PhaseFunction, 2> out;
  for (int i = 0; i < 2; ++i) {
    out[i] = [base, i](const Coords& y) {
      const Potentials pot = potentials(base.with_coords(y));
      return is_para(base.family) ? pot.A[i] : pot.Astar[i];
    };
  }
  return out;
}

struct BracketEntry {
  std::string name;  // "a,b"
  double value = 0.0;
  PhaseFunction left, right;
};

/// Pair order used in reports: "mom1,q1" rather than "q1,mom1".
inline constexpr std::array<int, 6> kReportOrder{kS, kAlpha, kMom1, kMom2, kQ1, kQ2};

/// Analytic brackets: the 15 coordinate pairs, the angular momentum j with
/// the vectors (it rotates them), and the (charge-weighted) potential brackets
/// {q^i, e*A*_j} = e*B*/2 eps^i_j, resp. {I_i, eA_j} = eB/2 eps_ij.
inline std::vector<BracketEntry> bracket_table(const OrbitPoint& pt) {
  std::vector<BracketEntry> out;
  const Mat6 P = bracket_matrix(pt);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const int ia = kReportOrder[a], ib = kReportOrder[b];
      out.push_back({std::string(kCoordNames[ia]) + "," + kCoordNames[ib], P(ia, ib),
                     coordinate_function(ia), coordinate_function(ib)});
    }

  const PhaseFunction jfun = angular_momentum_function(pt);
  const Vec2 rq = -eps_vec(pt.q), rm = -eps_vec(pt.mom);
  for (int i = 0; i < 2; ++i) {
    out.push_back({"j," + std::string(kCoordNames[kMom1 + i]), rm[i], jfun, coordinate_function(kMom1 + i)});
    out.push_back({"j," + std::string(kCoordNames[kQ1 + i]), rq[i], jfun, coordinate_function(kQ1 + i)});
  }

  const auto pots = potential_functions(pt);
  const bool para = is_para(pt.family);
  const Mat2 e = para ? (0.5 * pt.fields.eB * eps_lower()).eval()
                      : (0.5 * pt.fields.estar_bstar * eps_mixed()).eval();
  const int left0 = para ? kMom1 : kQ1;
  const std::string pot = para ? "eA" : "eAstar";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.push_back({std::string(kCoordNames[left0 + i]) + "," + pot + std::to_string(j + 1), e(i, j),
                     coordinate_function(left0 + i), pots[j]});
  return out;
}

/// The {s, .} rows exactly as printed (s-p, s-q, s-potential for Galilei;
/// s-I, s-q, s-potential for Para-Galilei). These are NOT brackets of the
/// chart coordinate s; they are kept so the discrepancy can be measured.
inline std::vector<BracketEntry> printed_s_rows(const OrbitPoint& pt) {
  std::vector<BracketEntry> out;
  const Potentials pot = potentials(pt);
  const auto pots = potential_functions(pt);
  const PhaseFunction s = coordinate_function(kS);
  const Mat2 E = eps_mixed();
  Vec2 smom, sq, spot;
  std::string potname;
  if (!is_para(pt.family)) {
    smom = eps_vec(pt.mom);
    sq = E * (pt.q - pot.Astar);
    spot = eps_vec(pot.Astar);
    potname = "eAstar";
  } else {
    smom = eps_vec(pt.mom - pot.A);
    sq = E * pt.q;
    spot = -eps_vec(pot.A);
    potname = "eA";
  }
  for (int i = 0; i < 2; ++i) {
    out.push_back({"s," + std::string(kCoordNames[kMom1 + i]), smom[i], s, coordinate_function(kMom1 + i)});
    out.push_back({"s," + std::string(kCoordNames[kQ1 + i]), sq[i], s, coordinate_function(kQ1 + i)});
    out.push_back({"s," + potname + std::to_string(i + 1), spot[i], s, pots[i]});
  }
  return out;
}

/// Galilei (s, p, alpha, q - e*A*); Para-Galilei (s, I + eA, alpha, q).
/// The Para-Galilei momentum must be I + eA (the same combination as in s);
/// I - eA has {.,.} = -2 eB and is not canonical.
inline Vec6 canonical_coords(const OrbitPoint& pt) {
  const Potentials pot = potentials(pt);
  Vec6 out;
  if (!is_para(pt.family)) {
    const Vec2 qt = pt.q - pot.Astar;
    out << pt.s, pt.mom.x(), pt.mom.y(), pt.alpha, qt.x(), qt.y();
  } else {
    const Vec2 It = pt.mom + pot.A;
    out << pt.s, It.x(), It.y(), pt.alpha, pt.q.x(), pt.q.y();
  }
  return out;
}

/// Infinitesimal action of the orbit-basis generators (J, F1|Pi1, K1, P1,
/// K2, P2) on the chart coordinates: column a is d/de chart(Ad*_{exp(e X_a)}).
/// With it, T Omega^{-1} T^T reproduces bracket_matrix.
inline Mat6 tangent_map(const OrbitPoint& pt) {
  Mat6 T = Mat6::Zero();
  const double m = pt.m();
  const Vec2 w = pt.intensity_vector();
  const Vec2 rq = -eps_vec(pt.q), rm = -eps_vec(pt.mom);
  T.col(0) << 0, 1, rq.x(), rq.y(), rm.x(), rm.y();
  T(kS, 1) = w.y();  // aux_1 x w
  const Vec2 e1(1, 0), e2(0, 1);
  if (!is_para(pt.family)) {
    const double g = pt.fields.estar_bstar * m;
    const Vec2 dq1 = g * eps_vec(e1), dq2 = g * eps_vec(e2);
    T.col(2) << 0, 0, dq1.x(), dq1.y(), -m, 0;
    T.col(3) << 0, 0, 1, 0, 0, 0;
    T.col(4) << 0, 0, dq2.x(), dq2.y(), 0, -m;
    T.col(5) << 0, 0, 0, 1, 0, 0;
  } else {
    const double eB = pt.fields.eB;
    const Vec2 dI1 = eB * eps_vec(e1), dI2 = eB * eps_vec(e2);
    T.col(2) << 0, 0, 0, 0, -m, 0;
    T.col(3) << 0, 0, 1, 0, dI1.x(), dI1.y();
    T.col(4) << 0, 0, 0, 0, 0, -m;
    T.col(5) << 0, 0, 0, 1, dI2.x(), dI2.y();
  }
  return T;
}

}  // namespace orbitkit
