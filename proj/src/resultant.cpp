#include "discknot/resultant.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace discknot {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw std::invalid_argument("PolyMatrix dimension must be >= 1");
}

BiPoly PolyMatrix::determinant() const {
  if (n_ > 20) throw std::invalid_argument("determinant: dimension too large for expansion");
  // minor(mask) = determinant of rows [n - popcount(mask), n) restricted to the
  // columns in mask; expanded along its first row.
  std::unordered_map<std::uint32_t, BiPoly> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> BiPoly {
    if (mask == 0) return BiPoly::constant(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t row = n_ - static_cast<std::size_t>(std::popcount(mask));
    BiPoly acc;
    int sign = 1;
    for (std::size_t col = 0; col < n_; ++col) {
      if (!(mask & (1U << col))) continue;
      const BiPoly& e = at(row, col);
      if (!e.is_zero()) {
        BiPoly sub = self(self, mask & ~(1U << col));
        acc = sign > 0 ? acc + e * sub : acc - e * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, (n_ == 32 ? 0U : (1U << n_)) - 1U);
}

int y_degree(const YPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!f[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

PolyMatrix sylvester_matrix(const YPoly& f, const YPoly& g) {
  const int m = y_degree(f), n = y_degree(g);
  if (m < 0 || n < 0) throw std::domain_error("resultant of the zero polynomial");
  if (m + n == 0) throw std::domain_error("resultant of two constants is undefined");
  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s.at(r, r + k) = f[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s.at(n + r, r + k) = g[static_cast<std::size_t>(n - k)];
  return s;
}

BiPoly resultant_y(const YPoly& f, const YPoly& g) {
  const int m = y_degree(f), n = y_degree(g);
  if (m < 0 || n < 0) throw std::domain_error("resultant of the zero polynomial");
  // Res(f, c) = c^deg f for a constant c (empty Sylvester block).
  if (n == 0) return g[0].pow(static_cast<unsigned>(m));
  if (m == 0) return f[0].pow(static_cast<unsigned>(n));
  return sylvester_matrix(f, g).determinant();
}

}  // namespace discknot
