#pragma once

// Newton polygon of F(x, t) with respect to branches x(t) -> 0 as t -> 0.
// Support points are written (j, i): j the x-exponent, i the t-exponent.

#include "discknot/poly.hpp"

#include <set>
#include <utility>
#include <vector>

namespace discknot::puiseux {

using SupportPoint = std::pair<int, int>;  // (x-exponent, t-exponent)

struct NewtonPolygon {
  /// Support of F / x^x_pow.
  std::set<SupportPoint> support;
  /// Lower hull vertices, x-exponent decreasing.
  std::vector<SupportPoint> hull_vertices;
  int x_pow = 0;
};

struct FaceData {
  SupportPoint from;  // larger x-exponent
  SupportPoint to;
  /// (i2 - i1) / (j1 - j2) in lowest terms.
  Rat lambda;
  int ramification = 1;  // denominator of lambda
  /// Sum of coeff * c^(j - j2) over support points on the edge.
  UniPoly face_poly{Var::c};
  /// i + lambda j on the edge line.
  Rat weight;

  int degree() const { return from.first - to.first; }
};

/// Throws std::invalid_argument on F = 0.
NewtonPolygon newton_polygon(const BiPoly& F);
std::vector<FaceData> faces(const NewtonPolygon& np, const BiPoly& F);

}  // namespace discknot::puiseux
