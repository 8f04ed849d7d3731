#include "discknot/invariants.hpp"

#include "discknot/resultant.hpp"

#include <stdexcept>
#include <string>

namespace discknot::invariants {

GermPQ::GermPQ(UniPoly P, UniPoly Q) : P_(std::move(P)), Q_(std::move(Q)) {
  if (P_.var() != Var::x || Q_.var() != Var::x)
    if (!P_.is_constant() || !Q_.is_constant()) throw std::invalid_argument("germ polynomials must be in x");
  if (ord(P_) < Valuation(1) || ord(Q_) < Valuation(1))
    throw std::invalid_argument("P and Q must vanish at the origin");
}

Valuation sigma(const GermPQ& g) { return min(ord(g.P()), ord(g.Q().derivative())); }

Valuation milnor(const GermPQ& g) {
  const UniPoly dP = g.P().derivative();
  const UniPoly dQ = g.Q().derivative();
  return ord(Rat(3) * dQ * dQ - g.P() * dP * dP);
}

Valuation milnor_oracle(const GermPQ& g) {
  const YPoly fy = {-BiPoly(g.P()), BiPoly(), BiPoly::constant(3)};
  const YPoly fx = {BiPoly(g.Q().derivative()), -BiPoly(g.P().derivative())};
  // -P'y + Q' degenerates to the zero polynomial when P' = Q' = 0.
  if (y_degree(fx) < 0) return Valuation::infinity();
  return ord(resultant_y(fy, fx), Var::x);
}

InvariantPair invariants(const GermPQ& g) { return {milnor(g), sigma(g)}; }

GermPQ tschirnhaus(const UniPoly& A, const UniPoly& B, const UniPoly& C) {
  const UniPoly P = make_rat(1, 3) * A * A - B;
  const UniPoly Q = C - make_rat(1, 3) * A * B + make_rat(2, 27) * A.pow(3);
  return GermPQ(P, Q);
}

namespace {

// sigma and mu only read coefficients below x^(3k+i+2); a coarser truncation
// of a(x) could change them.
void check_unit(const UnitSeries& a, int min_truncation, const char* family) {
  if (a.terms.coeff(0) == 0)
    throw std::invalid_argument(std::string(family) + ": unit series a(x) needs a(0) != 0");
  if (a.truncation && *a.truncation < min_truncation)
    throw std::invalid_argument(std::string(family) + ": unit series truncated at x^" +
                                std::to_string(*a.truncation) + ", need at least x^" +
                                std::to_string(min_truncation));
  if (a.truncation && a.terms.degree() >= *a.truncation)
    throw std::invalid_argument(std::string(family) + ": unit series has terms beyond its truncation");
}

}  // namespace

GermPQ normal_form(const ArnoldFamily& family) {
  const UniPoly x = UniPoly::variable();
  return std::visit(
      [&](const auto& f) -> GermPQ {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Jki>) {
          if (f.k < 2 || f.i < 1) throw std::invalid_argument("J_{k,i} requires k >= 2 and i > 0");
          check_unit(f.a, 3 * f.k + f.i + 2, "J_{k,i}");
          return tschirnhaus(x.pow(f.k), UniPoly(), f.a.terms * x.pow(3 * f.k + f.i));
        } else if constexpr (std::is_same_v<F, E6k1>) {
          if (f.k < 2) throw std::invalid_argument("E_{6k+1} requires k >= 2");
          check_unit(f.a, 3 * f.k + 2, "E_{6k+1}");
          return GermPQ(-x.pow(2 * f.k + 1), f.a.terms * x.pow(3 * f.k + 2));
        } else {
          if (f.nu < 1) throw std::invalid_argument("Brieskorn-Pham requires nu >= 1");
          return GermPQ(UniPoly(), x.pow(f.nu + 1));
        }
      },
      family);
}

}  // namespace discknot::invariants
