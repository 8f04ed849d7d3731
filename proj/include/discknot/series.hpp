#pragma once

// Truncated Puiseux series in t with coefficients in Q[c]/(phi).
//
// A series is a finite sum of terms a_e t^e (e rational) plus an error term
// O(t^precision). An absent precision means the series is exact. Every
// operation propagates precision, so a result never claims more terms than
// its inputs determine.

#include "discknot/poly.hpp"
#include "discknot/quotient.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace discknot::puiseux {

class NotEnoughPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent bound; std::nullopt stands for +infinity.
using Order = std::optional<Rat>;

class PuiseuxSeries {
 public:
  using Terms = std::map<Rat, QuotientElem>;

  PuiseuxSeries(ModulusPtr ring, Terms terms, Order precision = std::nullopt);

  static PuiseuxSeries zero(ModulusPtr ring, Order precision = std::nullopt);
  static PuiseuxSeries monomial(const QuotientElem& coeff, const Rat& exponent);
  static PuiseuxSeries t_power(ModulusPtr ring, const Rat& exponent, const Rat& coeff = 1);

  const ModulusPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  const Order& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  /// Exact and without terms.
  bool is_exact_zero() const { return is_exact() && terms_.empty(); }

  /// Exponent of the first nonzero term, if one is known.
  std::optional<Rat> valuation() const;
  /// Valuation if known, else the precision (nullopt for an exact zero).
  Order valuation_or_precision() const;
  /// Throws NotEnoughPrecision when no nonzero term is known.
  const QuotientElem& leading_coeff() const;
  Rat leading_exponent() const;
  QuotientElem coeff(const Rat& exponent) const;

  /// Drops terms at or beyond `order` and lowers the precision accordingly.
  PuiseuxSeries truncated(const Rat& order) const;
  /// The same terms, declared exact.
  PuiseuxSeries exact_part() const;
  /// Least common denominator of the exponents present.
  Int exponent_denominator() const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rat& k, const PuiseuxSeries& a);
  friend PuiseuxSeries operator*(const QuotientElem& k, const PuiseuxSeries& a);

 private:
  ModulusPtr ring_;
  Terms terms_;
  Order precision_;
};

/// Terms at or past `cap` removed; the precision drops to `cap` only if
/// something was removed or the input was already inexact.
PuiseuxSeries capped(const PuiseuxSeries& a, const Order& cap);
/// Product, additionally truncated at `cap`.
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b, const Order& cap = std::nullopt);
PuiseuxSeries pow(const PuiseuxSeries& a, unsigned n, const Order& cap = std::nullopt);
/// Reciprocal up to `cap`. An exact monomial inverts exactly.
/// Throws NotEnoughPrecision when the leading term is unknown and
/// ZeroDivisorSplit when the leading coefficient is a zero divisor.
PuiseuxSeries invert(const PuiseuxSeries& a, const Rat& cap);
/// G(x(t), t), truncated at `cap`.
PuiseuxSeries substitute(const BiPoly& G, const PuiseuxSeries& x, const Order& cap = std::nullopt);

/// Coefficientwise image in a factor ring.
PuiseuxSeries reduce_to(const PuiseuxSeries& a, const ModulusPtr& factor);

}  // namespace discknot::puiseux
