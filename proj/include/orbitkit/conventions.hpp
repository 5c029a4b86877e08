#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitkit {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Kinematical family of the extended group. The Para-Galilei groups come in
/// two signs, fixing [P_i, H] = +-omega^2 K_i.
enum class Family { Galilei, ParaGalileiPlus, ParaGalileiMinus };

inline constexpr bool is_para(Family f) noexcept { return f != Family::Galilei; }

/// +1 for Galilei and ParaGalileiPlus, -1 for ParaGalileiMinus.
inline constexpr double para_sign(Family f) noexcept {
  return f == Family::ParaGalileiMinus ? -1.0 : 1.0;
}

inline std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Galilei: return "galilei";
    case Family::ParaGalileiPlus: return "paragalilei_plus";
    case Family::ParaGalileiMinus: return "paragalilei_minus";
  }
  return "unknown";
}

inline Family parse_family(std::string_view s) {
  if (s == "galilei") return Family::Galilei;
  if (s == "paragalilei_plus") return Family::ParaGalileiPlus;
  if (s == "paragalilei_minus") return Family::ParaGalileiMinus;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Errors

struct FamilyMismatch : std::invalid_argument {
  FamilyMismatch(Family a, Family b)
      : std::invalid_argument("family mismatch: " + std::string(family_name(a)) +
                              " vs " + std::string(family_name(b))) {}
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The orbit chart (or the printed inverse Kirillov matrix) is singular here.
struct DegenerateOrbitPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ||f|| (Galilei) or ||p|| (Para-Galilei) vanishes, so alpha is undefined.
struct ZeroIntensity : DegenerateOrbitPoint {
  using DegenerateOrbitPoint::DegenerateOrbitPoint;
};

inline void require_same_family(Family a, Family b) {
  if (a != b) throw FamilyMismatch(a, b);
}

// ---------------------------------------------------------------------------
// Planar conventions
//
// eps(v) = (v2, -v1) = v x e3. The mixed tensor eps^i_j has eps^1_2 = -1 and
// eps^2_1 = +1, so that eps(v)_j = v_i eps^i_j and [J, K_1] = +K_2. The fully
// covariant/contravariant eps_{ij}, eps^{ij} have their (1,2) entry = +1.

inline Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

inline Vec2 eps_vec(const Vec2& v) { return {v.y(), -v.x()}; }

/// eps^i_j as a matrix indexed (i, j).
inline Mat2 eps_mixed() {
  Mat2 e;
  e << 0.0, -1.0, 1.0, 0.0;
  return e;
}

inline Mat2 eps_lower() {
  Mat2 e;
  e << 0.0, 1.0, -1.0, 0.0;
  return e;
}

inline Mat2 eps_upper() { return eps_lower(); }

/// Planar cross product a1 b2 - a2 b1.
inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// a x (B e3) = B (a2, -a1), the in-plane product with an out-of-plane field.
inline Vec2 cross_field(const Vec2& a, double field) { return field * eps_vec(a); }

/// (B e3) x a = B (-a2, a1).
inline Vec2 field_cross(double field, const Vec2& a) { return -field * eps_vec(a); }

inline double kronecker(int i, int j) noexcept { return i == j ? 1.0 : 0.0; }

inline Vec2 polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace orbitkit
