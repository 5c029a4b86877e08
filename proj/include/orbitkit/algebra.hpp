#pragma once

#include "orbitkit/conventions.hpp"
#include "orbitkit/dual.hpp"

#include <array>
#include <cmath>
#include <string_view>

namespace orbitkit {

inline constexpr int kAlgebraDim = 10;

/// Fixed basis ordering. Slot `Aux1`/`Aux2` holds F_i (Galilei) or Pi_i
/// (Para-Galilei); its group coordinate is eta (resp. l).
enum Generator : int { J = 0, K1, K2, P1, P2, Aux1, Aux2, H, M, S };

using AlgebraVector = Eigen::Matrix<double, kAlgebraDim, 1>;

struct AlgebraParams {
  Family family = Family::Galilei;
  double c = 1.0;      // velocity
  double r = 1.0;      // length
  double omega = 1.0;  // 1/time

  void validate() const {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameter("c must be positive");
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("r must be positive");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidParameter("omega must be positive");
  }
};

/// Coefficients over the fixed basis: (dtheta, dv, dx, daux, dt, dxi, dphi).
struct AlgebraElement {
  Family family = Family::Galilei;
  AlgebraVector coeffs = AlgebraVector::Zero();

  static AlgebraElement basis(Family f, int index) {
    AlgebraElement e{f};
    e.coeffs[index] = 1.0;
    return e;
  }

  double d_theta() const { return coeffs[J]; }
  Vec2 d_v() const { return {coeffs[K1], coeffs[K2]}; }
  Vec2 d_x() const { return {coeffs[P1], coeffs[P2]}; }
  Vec2 d_aux() const { return {coeffs[Aux1], coeffs[Aux2]}; }
  double d_t() const { return coeffs[H]; }
  double d_xi() const { return coeffs[M]; }
  double d_phi() const { return coeffs[S]; }

  void set_v(const Vec2& v) { coeffs[K1] = v.x(), coeffs[K2] = v.y(); }
  void set_x(const Vec2& v) { coeffs[P1] = v.x(), coeffs[P2] = v.y(); }
  void set_aux(const Vec2& v) { coeffs[Aux1] = v.x(), coeffs[Aux2] = v.y(); }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    require_same_family(a.family, b.family);
    a.coeffs += b.coeffs;
    return a;
  }
  friend AlgebraElement operator*(double s, AlgebraElement a) {
    a.coeffs *= s;
    return a;
  }
};

/// Dense rank-3 tensor C^c_{ab} over the 10-element basis.
class StructureConstants {
 public:
  explicit StructureConstants(Family family) : family_(family) { data_.fill(0.0); }

  Family family() const { return family_; }

  double operator()(int c, int a, int b) const { return data_[index(c, a, b)]; }
  double& operator()(int c, int a, int b) { return data_[index(c, a, b)]; }

  /// Sets [a, b] = coeff * c and [b, a] = -coeff * c.
  void set_antisymmetric(int a, int b, int c, double coeff) {
    (*this)(c, a, b) = coeff;
    (*this)(c, b, a) = -coeff;
  }

  static constexpr std::array<std::string_view, kAlgebraDim> galilei_labels{
      "J", "K1", "K2", "P1", "P2", "F1", "F2", "H", "M", "S"};
  static constexpr std::array<std::string_view, kAlgebraDim> para_labels{
      "J", "K1", "K2", "P1", "P2", "Pi1", "Pi2", "H", "M", "S"};

  const std::array<std::string_view, kAlgebraDim>& labels() const {
    return is_para(family_) ? para_labels : galilei_labels;
  }

 private:
  static constexpr int index(int c, int a, int b) {
    return (c * kAlgebraDim + a) * kAlgebraDim + b;
  }

  Family family_;
  std::array<double, kAlgebraDim * kAlgebraDim * kAlgebraDim> data_{};
};

/// Structure constants of the noncentrally extended Galilei or Para-Galilei
/// algebra. Every bracket not listed below is zero.
inline StructureConstants build_algebra(const AlgebraParams& params) {
  params.validate();
  StructureConstants C(params.family);
  const Mat2 e = eps_mixed();
  const int kk[2] = {K1, K2}, pp[2] = {P1, P2}, aa[2] = {Aux1, Aux2};

  // [J, X_j] = X_i eps^i_j for X in {K, P, F/Pi}
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (e(i, j) == 0.0) continue;
      C.set_antisymmetric(J, kk[j], kk[i], e(i, j));
      C.set_antisymmetric(J, pp[j], pp[i], e(i, j));
      C.set_antisymmetric(J, aa[j], aa[i], e(i, j));
    }
  }
  for (int i = 0; i < 2; ++i) C.set_antisymmetric(kk[i], pp[i], M, 1.0);

  if (!is_para(params.family)) {
    for (int i = 0; i < 2; ++i) {
      C.set_antisymmetric(kk[i], H, pp[i], 1.0);
      C.set_antisymmetric(pp[i], H, aa[i], 1.0);
    }
    C.set_antisymmetric(K1, K2, S, 1.0 / (params.c * params.c));
  } else {
    const double w2 = para_sign(params.family) * params.omega * params.omega;
    for (int i = 0; i < 2; ++i) {
      C.set_antisymmetric(pp[i], H, kk[i], w2);
      C.set_antisymmetric(kk[i], H, aa[i], 1.0);
    }
    C.set_antisymmetric(P1, P2, S, 1.0 / (params.r * params.r));
  }
  return C;
}

inline AlgebraElement bracket(const StructureConstants& C, const AlgebraElement& X,
                              const AlgebraElement& Y) {
  require_same_family(C.family(), X.family);
  require_same_family(C.family(), Y.family);
  // Summing over a < b with (X^a Y^b - X^b Y^a) makes [X,Y] = -[Y,X] bit-exact.
  AlgebraElement out{C.family()};
  for (int c = 0; c < kAlgebraDim; ++c) {
    double acc = 0.0;
    for (int a = 0; a < kAlgebraDim; ++a)
      for (int b = a + 1; b < kAlgebraDim; ++b) {
        const double k = C(c, a, b);
        if (k != 0.0) acc += k * (X.coeffs[a] * Y.coeffs[b] - X.coeffs[b] * Y.coeffs[a]);
      }
    out.coeffs[c] = acc;
  }
  return out;
}

/// max over (a,b,c,d) of |sum_e C^e_ab C^d_ec + C^e_bc C^d_ea + C^e_ca C^d_eb|.
inline double jacobi_residual(const StructureConstants& C) {
  double worst = 0.0;
  for (int a = 0; a < kAlgebraDim; ++a)
    for (int b = 0; b < kAlgebraDim; ++b)
      for (int c = 0; c < kAlgebraDim; ++c)
        for (int d = 0; d < kAlgebraDim; ++d) {
          double sum = 0.0;
          for (int e = 0; e < kAlgebraDim; ++e)
            sum += C(e, a, b) * C(d, e, c) + C(e, b, c) * C(d, e, a) + C(e, c, a) * C(d, e, b);
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

/// Duality pairing j dtheta + k.dv + (p|I).dx + E dt + (f|p).daux + m dxi + h dphi.
inline double pairing(const CoadjointVector& xi, const AlgebraElement& X) {
  require_same_family(xi.family, X.family);
  return xi.j * X.d_theta() + xi.k.dot(X.d_v()) + xi.translation_dual().dot(X.d_x()) +
         xi.E * X.d_t() + xi.aux_dual().dot(X.d_aux()) + xi.m * X.d_xi() + xi.h * X.d_phi();
}

}  // namespace orbitkit
