#include "discknot/series.hpp"

#include <algorithm>
#include <set>

namespace discknot::puiseux {

namespace {

Order min_order(const Order& a, const Order& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Order add_order(const Order& a, const Order& b) {
  if (!a || !b) return std::nullopt;
  return Rat(*a + *b);
}

void accumulate(PuiseuxSeries::Terms& terms, const Rat& e, const QuotientElem& c) {
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

// Applies `cap`: terms at or past it are dropped, and if any were dropped
// (or the input was already inexact) the precision is lowered to the cap.
void apply_cap(PuiseuxSeries::Terms& terms, Order& precision, const Order& cap) {
  Order bound = min_order(precision, cap);
  if (!bound) return;
  auto first_out = terms.lower_bound(*bound);
  const bool dropped = first_out != terms.end();
  terms.erase(first_out, terms.end());
  if (precision || dropped) precision = bound;
}

}  // namespace

PuiseuxSeries capped(const PuiseuxSeries& a, const Order& cap) {
  PuiseuxSeries::Terms t = a.terms();
  Order p = a.precision();
  apply_cap(t, p, cap);
  return PuiseuxSeries(a.ring(), std::move(t), p);
}

PuiseuxSeries::PuiseuxSeries(ModulusPtr ring, Terms terms, Order precision)
    : ring_(std::move(ring)), terms_(std::move(terms)), precision_(std::move(precision)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (precision_) terms_.erase(terms_.lower_bound(*precision_), terms_.end());
}

PuiseuxSeries PuiseuxSeries::zero(ModulusPtr ring, Order precision) {
  return PuiseuxSeries(std::move(ring), {}, std::move(precision));
}

PuiseuxSeries PuiseuxSeries::monomial(const QuotientElem& coeff, const Rat& exponent) {
  Terms t;
  t.emplace(exponent, coeff);
  return PuiseuxSeries(coeff.modulus(), std::move(t));
}

PuiseuxSeries PuiseuxSeries::t_power(ModulusPtr ring, const Rat& exponent, const Rat& coeff) {
  return monomial(QuotientElem(ring, coeff), exponent);
}

std::optional<Rat> PuiseuxSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Order PuiseuxSeries::valuation_or_precision() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return precision_;
}

const QuotientElem& PuiseuxSeries::leading_coeff() const {
  if (terms_.empty()) throw NotEnoughPrecision("leading term not determined at the current truncation");
  return terms_.begin()->second;
}

Rat PuiseuxSeries::leading_exponent() const {
  if (terms_.empty()) throw NotEnoughPrecision("leading term not determined at the current truncation");
  return terms_.begin()->first;
}

QuotientElem PuiseuxSeries::coeff(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? QuotientElem(ring_, Rat(0)) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& order) const {
  Terms t = terms_;
  Order p = precision_;
  apply_cap(t, p, order);
  if (!p || *p > order) p = order;
  return PuiseuxSeries(ring_, std::move(t), p);
}

PuiseuxSeries PuiseuxSeries::exact_part() const { return PuiseuxSeries(ring_, terms_); }

Int PuiseuxSeries::exponent_denominator() const {
  Int d = 1;
  for (const auto& kv : terms_) d = lcm(d, kv.first.get_den());
  return d;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, -c);
  return PuiseuxSeries(ring_, std::move(t), precision_);
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(t, e, c);
  return PuiseuxSeries(a.ring_, std::move(t), min_order(a.precision_, b.precision_));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const Rat& k, const PuiseuxSeries& a) {
  if (k == 0) return PuiseuxSeries::zero(a.ring_, a.precision_);
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : a.terms_) t.emplace(e, k * c);
  return PuiseuxSeries(a.ring_, std::move(t), a.precision_);
}

PuiseuxSeries operator*(const QuotientElem& k, const PuiseuxSeries& a) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : a.terms_) accumulate(t, e, k * c);
  // A zero-divisor k can annihilate terms; the error term scales with it.
  return PuiseuxSeries(a.ring_, std::move(t), a.precision_);
}

PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b, const Order& cap) {
  if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxSeries::zero(a.ring());
  // O(t^pa) * b = O(t^(pa + v(b))) and symmetrically.
  Order precision = std::nullopt;
  if (a.precision()) {
    Order vb = b.valuation_or_precision();
    precision = add_order(a.precision(), vb);
  }
  if (b.precision()) {
    Order va = a.valuation_or_precision();
    precision = min_order(precision, add_order(b.precision(), va));
  }
  const Order bound = min_order(precision, cap);
  PuiseuxSeries::Terms out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Rat e = ea + eb;
      if (bound && e >= *bound) break;  // b's exponents increase
      accumulate(out, e, ca * cb);
    }
  }
  // Exact inputs only lose exactness if the product really reaches the cap.
  bool dropped = false;
  if (bound && !precision)
    dropped = a.terms().rbegin()->first + b.terms().rbegin()->first >= *bound;
  const Order result_precision = (precision || dropped) ? bound : std::nullopt;
  return PuiseuxSeries(a.ring(), std::move(out), result_precision);
}

PuiseuxSeries pow(const PuiseuxSeries& a, unsigned n, const Order& cap) {
  if (n == 0) return PuiseuxSeries::t_power(a.ring(), 0);
  if (n == 1) return capped(a, cap);
  if (cap && !a.terms().empty()) {
    // Every term of a^n lies past the cap: return the bare error term rather
    // than building empty intermediates whose valuation would be unknown.
    const Rat v = a.leading_exponent();
    if (Rat(n) * v >= *cap) {
      Order p = cap;
      if (a.precision()) p = std::min(*cap, Rat(*a.precision() + Rat(n - 1) * v));
      return PuiseuxSeries::zero(a.ring(), p);
    }
  }
  // Intermediate power a^k is later multiplied by factors of total valuation
  // (n - k) v(a), so it needs precision cap - (n - k) v(a) only.
  const Order va = a.valuation_or_precision();
  auto cap_for = [&](unsigned k) -> Order {
    if (!cap || !va) return cap;
    return Rat(*cap - Rat(n - k) * *va);
  };
  PuiseuxSeries result = PuiseuxSeries::t_power(a.ring(), 0);
  unsigned have = 0;
  PuiseuxSeries base = a;
  unsigned base_k = 1;
  unsigned m = n;
  while (m) {
    if (m & 1U) {
      have += base_k;
      result = have == base_k ? base : mul(result, base, cap_for(have));
    }
    m >>= 1U;
    if (m) {
      base_k *= 2;
      base = mul(base, base, cap_for(base_k));
    }
  }
  return result;
}

PuiseuxSeries invert(const PuiseuxSeries& a, const Rat& cap) {
  const Rat v = a.leading_exponent();
  const QuotientElem lead_inv = a.leading_coeff().inverse();
  if (a.terms().size() == 1 && a.is_exact()) {
    PuiseuxSeries r = PuiseuxSeries::monomial(lead_inv, -v);
    return -v >= cap ? PuiseuxSeries::zero(a.ring(), cap) : r;
  }
  // a = a0 t^v (1 + r(tau)), tau = t^(1/D); 1/(1 + r) by long division on the tau grid.
  Int D = 1;
  for (const auto& kv : a.terms()) D = lcm(D, Rat(kv.first - v).get_den());
  Order bound = cap;
  if (a.precision()) bound = std::min(cap, Rat(*a.precision() - 2 * v));
  // Result exponents are -v + k/D with -v + k/D < bound.
  const Rat steps = (*bound + v) * Rat(D);
  long K = 0;
  if (steps > 0) {
    Int ceil_steps = steps.get_num() / steps.get_den();
    if (Rat(ceil_steps) < steps) ceil_steps += 1;
    K = ceil_steps.get_si();
  }
  std::vector<std::pair<long, QuotientElem>> r;  // tau index, coefficient of r
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) {
    Rat idx = (it->first - v) * Rat(D);
    r.emplace_back(idx.get_num().get_si(), lead_inv * it->second);
  }
  std::vector<QuotientElem> b;
  b.reserve(static_cast<std::size_t>(K));
  PuiseuxSeries::Terms out;
  for (long k = 0; k < K; ++k) {
    QuotientElem bk(a.ring(), Rat(k == 0 ? 1 : 0));
    for (const auto& [j, rj] : r) {
      if (j > k) break;
      bk -= rj * b[static_cast<std::size_t>(k - j)];
    }
    if (!bk.is_zero()) out.emplace(Rat(-v + Rat(k) / Rat(D)), lead_inv * bk);
    b.push_back(std::move(bk));
  }
  return PuiseuxSeries(a.ring(), std::move(out), bound);
}

PuiseuxSeries substitute(const BiPoly& G, const PuiseuxSeries& x, const Order& cap) {
  const ModulusPtr& ring = x.ring();
  // Group G by x-exponent: x^j * sum_i a_ji t^i.
  std::map<int, std::vector<std::pair<int, Rat>>> by_power;
  for (const auto& [k, c] : G.terms()) by_power[k.first].emplace_back(k.second, c);
  PuiseuxSeries acc = PuiseuxSeries::zero(ring);
  if (by_power.empty()) return acc;

  // Each power is built from x itself so that a power lying entirely past
  // its cap never feeds a later one.
  for (const auto& [j, ts] : by_power) {
    int lowest_i = ts.front().first;
    for (const auto& [i, c] : ts) lowest_i = std::min(lowest_i, i);
    const Order need = cap ? Order(Rat(*cap - lowest_i)) : std::nullopt;
    const PuiseuxSeries power = pow(x, static_cast<unsigned>(j), need);
    for (const auto& [i, c] : ts) acc = acc + mul(power, PuiseuxSeries::t_power(ring, i, c), cap);
  }
  return capped(acc, cap);
}

PuiseuxSeries reduce_to(const PuiseuxSeries& a, const ModulusPtr& factor) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : a.terms()) {
    QuotientElem r = puiseux::reduce_to(c, factor);
    if (!r.is_zero()) t.emplace(e, std::move(r));
  }
  return PuiseuxSeries(factor, std::move(t), a.precision());
}

}  // namespace discknot::puiseux
