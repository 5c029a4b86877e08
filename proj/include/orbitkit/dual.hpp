#pragma once

#include "orbitkit/conventions.hpp"

namespace orbitkit {

/// Point of the dual of the extended algebra. Galilei uses (p, f); the
/// Para-Galilei families use (I, p). The unused vector stays zero.
struct CoadjointVector {
  Family family = Family::Galilei;
  double h = 0.0;  // action
  double m = 0.0;  // mass
  double j = 0.0;  // angular momentum
  double E = 0.0;  // energy
  Vec2 k = Vec2::Zero();  // static momentum
  Vec2 p = Vec2::Zero();  // linear momentum
  Vec2 f = Vec2::Zero();  // force (Galilei)
  Vec2 I = Vec2::Zero();  // conjugate to translations (Para-Galilei)

  /// Component paired with dx: p (Galilei) or I (Para-Galilei).
  const Vec2& translation_dual() const { return is_para(family) ? I : p; }
  /// Component paired with the aux slot: f (Galilei) or p (Para-Galilei).
  const Vec2& aux_dual() const { return is_para(family) ? p : f; }

  Vec2 q() const { return k / m; }
};

}  // namespace orbitkit
