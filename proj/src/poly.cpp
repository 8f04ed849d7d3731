#include "discknot/poly.hpp"

#include "discknot/parse.hpp"

#include <stdexcept>

namespace discknot {

namespace {

template <class Map>
void add_term(Map& terms, const typename Map::key_type& key, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

template <class Map>
void drop_zeros(Map& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

Var merged_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.var();
  if (b.is_constant()) return a.var();
  if (a.var() != b.var()) throw std::invalid_argument("mixing polynomials in different variables");
  return a.var();
}

}  // namespace

UniPoly::UniPoly(Var var, Terms terms) : var_(var), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_)
    if (e < 0) throw std::invalid_argument("negative exponent");
  drop_zeros(terms_);
}

UniPoly::UniPoly(Var var, const std::vector<Rat>& dense) : var_(var) {
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) terms_.emplace(static_cast<int>(i), dense[i]);
}

UniPoly UniPoly::constant(const Rat& c, Var var) { return monomial(c, 0, var); }

UniPoly UniPoly::monomial(const Rat& c, int exponent, Var var) {
  UniPoly p(var);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

Rat UniPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat UniPoly::leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

UniPoly UniPoly::derivative() const {
  UniPoly d(var_);
  for (const auto& [e, c] : terms_)
    if (e > 0) d.terms_.emplace(e - 1, c * e);
  return d;
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly result = constant(1, var_);
  UniPoly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading_coeff();
  return inv * *this;
}

Rat UniPoly::evaluate(const Rat& at) const {
  Rat acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= at;
    acc += it->second;
    prev = it->first;
  }
  for (int k = 0; k < prev; ++k) acc *= at;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& other) const {
  UniPoly acc(other.var());
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc = acc * other;
    acc = acc + constant(it->second, other.var());
    prev = it->first;
  }
  for (int k = 0; k < prev; ++k) acc = acc * other;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r(merged_var(a, b), a.terms_);
  for (const auto& [e, c] : b.terms_) add_term(r.terms_, e, c);
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(merged_var(a, b));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) add_term(r.terms_, ea + eb, ca * cb);
  return r;
}

UniPoly operator*(const Rat& k, const UniPoly& a) {
  if (k == 0) return UniPoly(a.var());
  UniPoly r = a;
  for (auto& kv : r.terms_) kv.second *= k;
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Var v = merged_var(a, b);
  UniPoly quotient(v);
  UniPoly rem = a.with_var(v);
  const int db = b.degree();
  const Rat lead_inv = 1 / b.leading_coeff();
  while (!rem.is_zero() && rem.degree() >= db) {
    UniPoly term = UniPoly::monomial(rem.leading_coeff() * lead_inv, rem.degree() - db, v);
    quotient = quotient + term;
    rem = rem - term * b;
  }
  return {quotient, rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  Var v = merged_var(a, b);
  UniPoly r0 = a.with_var(v), r1 = b.with_var(v);
  UniPoly s0 = UniPoly::constant(1, v), s1(v);
  UniPoly t0(v), t1 = UniPoly::constant(1, v);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.leading_coeff();
  return {inv * r0, inv * s0, inv * t0};
}

SquarefreeCheck gcd_sqfree(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("gcd_sqfree of the zero polynomial");
  UniPoly g = gcd(p, p.derivative());
  bool sqfree = g.is_constant() && !g.is_zero();
  return {g, sqfree};
}

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [k, c] : terms_)
    if (k.first < 0 || k.second < 0) throw std::invalid_argument("negative exponent");
  drop_zeros(terms_);
}

BiPoly::BiPoly(const UniPoly& p) {
  if (p.var() == Var::c && !p.is_constant())
    throw std::invalid_argument("cannot embed a polynomial in c into Q[x,t]");
  for (const auto& [e, c] : p.terms())
    terms_.emplace(p.var() == Var::t ? Key{0, e} : Key{e, 0}, c);
}

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rat& c, int x_exp, int t_exp) {
  if (x_exp < 0 || t_exp < 0) throw std::invalid_argument("negative exponent");
  BiPoly p;
  if (c != 0) p.terms_.emplace(Key{x_exp, t_exp}, c);
  return p;
}

Rat BiPoly::coeff(int x_exp, int t_exp) const {
  auto it = terms_.find({x_exp, t_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, v == Var::t ? k.second : k.first);
  return d;
}

UniPoly BiPoly::t_coeff(int i) const {
  UniPoly::Terms out;
  for (const auto& [k, c] : terms_)
    if (k.second == i) out.emplace(k.first, c);
  return UniPoly(Var::x, std::move(out));
}

UniPoly BiPoly::at_t(const Rat& value) const {
  UniPoly::Terms out;
  for (const auto& [k, c] : terms_) {
    Rat tv = 1;
    for (int i = 0; i < k.second; ++i) tv *= value;
    add_term(out, k.first, c * tv);
  }
  return UniPoly(Var::x, std::move(out));
}

BiPoly BiPoly::derivative(Var v) const {
  if (v == Var::c) throw std::invalid_argument("BiPoly has no variable c");
  BiPoly d;
  for (const auto& [k, c] : terms_) {
    int e = v == Var::x ? k.first : k.second;
    if (e == 0) continue;
    Key nk = v == Var::x ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
    d.terms_.emplace(nk, c * e);
  }
  return d;
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

BiPoly BiPoly::divide_x_power(int k) const {
  BiPoly r;
  for (const auto& [key, c] : terms_) {
    if (key.first < k) throw std::domain_error("divide_x_power: polynomial not divisible");
    r.terms_.emplace(Key{key.first - k, key.second}, c);
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) add_term(r.terms_, k, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      add_term(r.terms_, BiPoly::Key{ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiPoly operator*(const Rat& k, const BiPoly& a) {
  if (k == 0) return {};
  BiPoly r = a;
  for (auto& kv : r.terms_) kv.second *= k;
  return r;
}

Valuation ord(const UniPoly& p) {
  return p.is_zero() ? Valuation::infinity() : Valuation(p.terms().begin()->first);
}

Valuation ord(const BiPoly& p, Var v) {
  if (p.is_zero()) return Valuation::infinity();
  int m = -1;
  for (const auto& [k, c] : p.terms()) {
    int e = v == Var::t ? k.second : k.first;
    if (m < 0 || e < m) m = e;
  }
  return Valuation(m);
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }

}  // namespace discknot
