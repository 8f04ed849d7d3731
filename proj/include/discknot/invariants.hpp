#pragma once

// Milnor number and sigma-invariant of germs f = y^3 - P(x) y + Q(x), and the
// depressed-cubic normal forms of the J_{k,i}, E_{6k+1} and Brieskorn-Pham
// families.

#include "discknot/poly.hpp"

#include <optional>
#include <variant>

namespace discknot::invariants {

/// The germ y^3 - P(x) y + Q(x). P and Q must vanish at the origin.
class GermPQ {
 public:
  GermPQ(UniPoly P, UniPoly Q);

  const UniPoly& P() const { return P_; }
  const UniPoly& Q() const { return Q_; }

 private:
  UniPoly P_;
  UniPoly Q_;
};

struct InvariantPair {
  Valuation mu;
  Valuation sigma;
};

/// min{ord P, ord Q'}.
Valuation sigma(const GermPQ& g);
/// ord(3Q'^2 - P P'^2); infinite for a non-isolated singularity.
Valuation milnor(const GermPQ& g);
/// ord of Res_y(3y^2 - P, -P'y + Q'); must agree with milnor().
Valuation milnor_oracle(const GermPQ& g);
InvariantPair invariants(const GermPQ& g);

/// Depressed form of y^3 + A y^2 + B y + C under y -> y - A/3:
/// P = A^2/3 - B, Q = C - AB/3 + 2A^3/27.
GermPQ tschirnhaus(const UniPoly& A, const UniPoly& B, const UniPoly& C);

/// A unit a(x), a(0) != 0, known modulo x^truncation (an exact polynomial
/// when truncation is empty).
struct UnitSeries {
  UniPoly terms = UniPoly::constant(1);
  std::optional<int> truncation;
};
struct Jki {
  int k;
  int i;
  UnitSeries a;
};
struct E6k1 {
  int k;
  UnitSeries a;
};
struct BrieskornPham {
  int nu;
};
using ArnoldFamily = std::variant<Jki, E6k1, BrieskornPham>;

/// Throws std::invalid_argument on parameter-range violations, including a
/// unit series truncated below degree 3k+i+2.
GermPQ normal_form(const ArnoldFamily& family);

}  // namespace discknot::invariants
