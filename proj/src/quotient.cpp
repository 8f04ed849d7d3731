#include "discknot/quotient.hpp"

#include <algorithm>

namespace discknot::puiseux {

Modulus::Modulus(UniPoly phi) : phi_(phi.with_var(Var::c)), degree_(phi.degree()) {
  if (degree_ < 1) throw std::invalid_argument("modulus must be nonconstant");
  if (!gcd_sqfree(phi_).is_squarefree) throw std::invalid_argument("modulus must be squarefree");
  const Rat lead_inv = 1 / phi_.leading_coeff();
  for (const auto& [e, c] : phi_.terms())
    if (e < degree_) tail_.emplace_back(e, -c * lead_inv);
}

void Modulus::reduce(std::vector<Rat>& dense) const {
  const auto n = static_cast<std::size_t>(degree_);
  for (std::size_t i = dense.size(); i-- > n;) {
    if (dense[i] == 0) continue;
    const Rat top = dense[i];
    const std::size_t shift = i - n;
    for (const auto& [e, r] : tail_) dense[shift + static_cast<std::size_t>(e)] += top * r;
  }
  dense.resize(n);
}

ModulusPtr make_modulus(UniPoly phi) { return std::make_shared<const Modulus>(std::move(phi)); }

ZeroDivisorSplit::ZeroDivisorSplit(UniPoly factor, UniPoly cofactor)
    : std::runtime_error("zero divisor: modulus splits"),
      factor_(std::move(factor)),
      cofactor_(std::move(cofactor)) {}

QuotientElem::QuotientElem(ModulusPtr mod, const UniPoly& value) : mod_(std::move(mod)) {
  std::vector<Rat> dense(static_cast<std::size_t>(std::max(value.degree() + 1, mod_->degree())));
  for (const auto& [e, c] : value.terms()) dense[static_cast<std::size_t>(e)] = c;
  mod_->reduce(dense);
  v_ = std::move(dense);
}

QuotientElem::QuotientElem(ModulusPtr mod, const Rat& value) : mod_(std::move(mod)) {
  v_.assign(static_cast<std::size_t>(mod_->degree()), Rat(0));
  v_[0] = value;
}

QuotientElem QuotientElem::generator(ModulusPtr mod) {
  return QuotientElem(mod, UniPoly::variable(Var::c));
}

bool QuotientElem::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rat& r) { return r == 0; });
}

bool QuotientElem::is_rational() const {
  return std::all_of(v_.begin() + 1, v_.end(), [](const Rat& r) { return r == 0; });
}

QuotientElem QuotientElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in quotient ring");
  if (is_rational()) return QuotientElem(mod_, Rat(1 / v_[0]));
  ExtendedGcd eg = extended_gcd(value(), mod_->phi());
  if (eg.g.degree() > 0) throw ZeroDivisorSplit(eg.g, divmod(mod_->phi(), eg.g).first.monic());
  return QuotientElem(mod_, eg.u);
}

QuotientElem QuotientElem::pow(unsigned n) const {
  QuotientElem result(mod_, Rat(1));
  QuotientElem base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

QuotientElem QuotientElem::operator-() const {
  QuotientElem r = *this;
  for (auto& c : r.v_) c = -c;
  return r;
}

void QuotientElem::check_same_ring(const QuotientElem& o) const {
  if (mod_ != o.mod_ && !(mod_->phi() == o.mod_->phi()))
    throw std::invalid_argument("quotient elements from different rings");
}

QuotientElem& QuotientElem::operator+=(const QuotientElem& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

QuotientElem& QuotientElem::operator-=(const QuotientElem& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
  a.check_same_ring(b);
  if (a.is_rational()) return a.v_[0] * b;
  if (b.is_rational()) return b.v_[0] * a;
  const std::size_t n = a.v_.size();
  std::vector<Rat> w(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.v_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.v_[j] != 0) w[i + j] += a.v_[i] * b.v_[j];
  }
  a.mod_->reduce(w);
  return QuotientElem(a.mod_, std::move(w));
}

QuotientElem operator*(const Rat& k, QuotientElem a) {
  for (auto& c : a.v_) c *= k;
  return a;
}

QuotientElem reduce_to(const QuotientElem& a, const ModulusPtr& factor) {
  return QuotientElem(factor, a.value());
}

QuotientElem crt(const QuotientElem& a, const QuotientElem& b, const ModulusPtr& product) {
  const UniPoly& g = a.modulus()->phi();
  const UniPoly& h = b.modulus()->phi();
  // u g + v h = 1  =>  x = a v h + b u g
  ExtendedGcd eg = extended_gcd(g, h);
  if (eg.g.degree() != 0) throw std::invalid_argument("crt: moduli not coprime");
  UniPoly x = a.value() * eg.v * h + b.value() * eg.u * g;
  return QuotientElem(product, x);
}

namespace {

// Row-echelon basis over Q; insert() returns false for dependent vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}

  bool insert(std::vector<Rat> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rat f = v[pivot];
      for (std::size_t i = 0; i < n_; ++i) v[i] -= f * row[i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rat& r) { return r != 0; });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    const Rat inv = 1 / v[pivot];
    for (auto& c : v) c *= inv;
    for (auto& [p, row] : rows_) {
      if (row[pivot] == 0) continue;
      const Rat f = row[pivot];
      for (std::size_t i = 0; i < n_; ++i) row[i] -= f * v[i];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<Rat>>> rows_;
};

}  // namespace

int generated_subalgebra_dim(const ModulusPtr& mod, std::span<const QuotientElem> gens) {
  const auto n = static_cast<std::size_t>(mod->degree());
  EchelonBasis basis(n);
  std::vector<QuotientElem> spanning;
  auto add = [&](const QuotientElem& e) {
    if (basis.insert(std::vector<Rat>(e.coeffs().begin(), e.coeffs().end()))) spanning.push_back(e);
  };
  add(QuotientElem(mod, Rat(1)));
  // Close the span under multiplication by each generator; the span then
  // contains every monomial in the generators.
  for (std::size_t head = 0; head < spanning.size() && basis.rank() < n; ++head) {
    const QuotientElem current = spanning[head];
    for (const auto& g : gens) {
      add(current * g);
      if (basis.rank() == n) break;
    }
  }
  return static_cast<int>(basis.rank());
}

}  // namespace discknot::puiseux
