#include "discknot/rational.hpp"

#include <stdexcept>

namespace discknot {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("empty integer");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Int(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  return make_rat(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long to_long(const Rat& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw std::domain_error("rational " + to_string(r) + " is not a machine integer");
  return r.get_num().get_si();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace discknot
