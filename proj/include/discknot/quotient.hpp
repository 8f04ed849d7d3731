#pragma once

// Arithmetic in Q[c]/(phi) for a squarefree phi. A residue class of c stands
// for all roots of phi at once, so conjugate Puiseux branches are carried as
// a single object.

#include "discknot/poly.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace discknot::puiseux {

class Modulus {
 public:
  /// Throws std::invalid_argument unless phi is nonconstant and squarefree.
  explicit Modulus(UniPoly phi);

  const UniPoly& phi() const { return phi_; }
  int degree() const { return degree_; }
  /// Reduces a dense coefficient vector in place to length degree().
  void reduce(std::vector<Rat>& dense) const;

 private:
  UniPoly phi_;
  int degree_;
  std::vector<std::pair<int, Rat>> tail_;  // c^deg = sum tail_k c^k
};

using ModulusPtr = std::shared_ptr<const Modulus>;

ModulusPtr make_modulus(UniPoly phi);

/// Inversion met a non-invertible, nonzero class: gcd(value, phi) is a proper
/// factor of phi. Callers split the computation along factor * cofactor.
class ZeroDivisorSplit : public std::runtime_error {
 public:
  ZeroDivisorSplit(UniPoly factor, UniPoly cofactor);
  const UniPoly& factor() const { return factor_; }
  const UniPoly& cofactor() const { return cofactor_; }

 private:
  UniPoly factor_;
  UniPoly cofactor_;
};

class QuotientElem {
 public:
  QuotientElem(ModulusPtr mod, const UniPoly& value);
  QuotientElem(ModulusPtr mod, const Rat& value);

  static QuotientElem generator(ModulusPtr mod);

  const ModulusPtr& modulus() const { return mod_; }
  std::span<const Rat> coeffs() const { return v_; }
  UniPoly value() const { return UniPoly(Var::c, v_); }
  bool is_zero() const;
  bool is_rational() const;

  /// Throws ZeroDivisorSplit for a zero divisor, std::domain_error for zero.
  QuotientElem inverse() const;
  QuotientElem pow(unsigned n) const;

  QuotientElem operator-() const;
  QuotientElem& operator+=(const QuotientElem& o);
  QuotientElem& operator-=(const QuotientElem& o);
  friend QuotientElem operator+(QuotientElem a, const QuotientElem& b) { return a += b; }
  friend QuotientElem operator-(QuotientElem a, const QuotientElem& b) { return a -= b; }
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator*(const Rat& k, QuotientElem a);
  friend bool operator==(const QuotientElem& a, const QuotientElem& b) { return a.v_ == b.v_; }

 private:
  QuotientElem(ModulusPtr mod, std::vector<Rat> reduced) : mod_(std::move(mod)), v_(std::move(reduced)) {}
  void check_same_ring(const QuotientElem& o) const;

  ModulusPtr mod_;
  std::vector<Rat> v_;  // length mod_->degree()
};

/// Image of an element of Q[c]/(phi) in Q[c]/(factor), factor | phi.
QuotientElem reduce_to(const QuotientElem& a, const ModulusPtr& factor);

/// Chinese remaindering: the class mod phi = g*h congruent to a mod g and b mod h.
QuotientElem crt(const QuotientElem& a, const QuotientElem& b, const ModulusPtr& product);

/// Dimension over Q of the subalgebra of Q[c]/(phi) generated by `gens`.
/// Over C the ring splits as C^deg(phi), one coordinate per root, so this
/// counts the classes of roots on which all generators take equal values.
int generated_subalgebra_dim(const ModulusPtr& mod, std::span<const QuotientElem> gens);

}  // namespace discknot::puiseux
