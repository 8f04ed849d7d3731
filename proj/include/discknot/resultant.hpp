#pragma once

#include "discknot/poly.hpp"

#include <vector>

namespace discknot {

/// Polynomial in an eliminated variable y with coefficients in Q[x,t];
/// element i multiplies y^i.
using YPoly = std::vector<BiPoly>;

/// Square matrix with BiPoly entries, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n);

  std::size_t dim() const { return n_; }
  BiPoly& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const BiPoly& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  /// Exact Laplace expansion along rows, memoising minors by column subset.
  BiPoly determinant() const;

 private:
  std::size_t n_;
  std::vector<BiPoly> entries_;
};

/// y-degree with trailing zero coefficients ignored; -1 for the zero polynomial.
int y_degree(const YPoly& f);

/// Sylvester matrix of f and g in y: deg g rows of f's coefficients, then
/// deg f rows of g's, each row leading-coefficient first.
PolyMatrix sylvester_matrix(const YPoly& f, const YPoly& g);

/// Res_y(f, g) = det sylvester_matrix(f, g). With this orientation
/// Res_y(3y^2 - P, -P'y + Q') = 3Q'^2 - P P'^2 exactly.
/// Throws std::domain_error if either input is zero.
BiPoly resultant_y(const YPoly& f, const YPoly& g);

}  // namespace discknot
