#pragma once

// Sparse exact-rational polynomials in one variable (x, t or c) and in the
// two variables (x, t). All values are immutable once built: every operation
// returns a new polynomial and no zero coefficient is ever stored.

#include "discknot/rational.hpp"
#include "discknot/valuation.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace discknot {

enum class Var : char { x = 'x', t = 't', c = 'c' };

class UniPoly {
 public:
  using Terms = std::map<int, Rat>;

  UniPoly() = default;
  explicit UniPoly(Var var) : var_(var) {}
  UniPoly(Var var, Terms terms);
  /// Dense constructor, coefficient i multiplies var^i.
  UniPoly(Var var, const std::vector<Rat>& dense);

  static UniPoly constant(const Rat& c, Var var = Var::x);
  static UniPoly monomial(const Rat& c, int exponent, Var var = Var::x);
  static UniPoly variable(Var var = Var::x) { return monomial(1, 1, var); }

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Rat coeff(int exponent) const;
  /// Zero for the zero polynomial.
  Rat leading_coeff() const;
  std::size_t size() const { return terms_.size(); }

  UniPoly derivative() const;
  UniPoly pow(unsigned n) const;
  UniPoly monic() const;
  UniPoly with_var(Var v) const { return UniPoly(v, terms_); }
  Rat evaluate(const Rat& at) const;
  /// Substitutes var -> other(var).
  UniPoly compose(const UniPoly& other) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& k, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

 private:
  Var var_ = Var::x;
  Terms terms_;
};

/// Division with remainder over Q. Throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly g;  // monic
  UniPoly u;  // u*a + v*b = g
  UniPoly v;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeCheck {
  UniPoly gcd_with_derivative;
  bool is_squarefree = false;
};
/// gcd(p, p') and whether it is a nonzero constant. Throws on p = 0.
SquarefreeCheck gcd_sqfree(const UniPoly& p);

/// Bivariate polynomial in (x, t). Keys are (x-exponent, t-exponent).
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rat>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);
  /// Embeds a univariate polynomial in x or t.
  BiPoly(const UniPoly& p);  // NOLINT(google-explicit-constructor)

  static BiPoly constant(const Rat& c);
  static BiPoly monomial(const Rat& c, int x_exp, int t_exp);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly t() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(int x_exp, int t_exp) const;
  int degree(Var v) const;

  /// Coefficient of t^i as a polynomial in x.
  UniPoly t_coeff(int i) const;
  /// Specialisation t = value.
  UniPoly at_t(const Rat& value) const;

  BiPoly derivative(Var v) const;
  BiPoly pow(unsigned n) const;
  /// Divides by x^k; requires ord_x >= k.
  BiPoly divide_x_power(int k) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rat& k, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Least exponent of `v` in the support; ∞ iff p = 0.
Valuation ord(const UniPoly& p);
Valuation ord(const BiPoly& p, Var v = Var::x);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);
std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace discknot
