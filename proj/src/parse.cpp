#include "discknot/parse.hpp"

#include <cctype>
#include <sstream>

namespace discknot {

namespace {

constexpr int kMaxExponent = 1 << 20;

std::string describe(const std::set<std::string>& expected) {
  std::string s;
  for (const auto& e : expected) s += (s.empty() ? "" : ", ") + e;
  return s;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_t) : text_(text), allow_t_(allow_t) {}

  BiPoly run() {
    BiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return p;
  }

 private:
  BiPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    BiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BiPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  BiPoly factor() {
    BiPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    Int e = uint_literal();
    if (e > kMaxExponent) fail({"exponent <= " + std::to_string(kMaxExponent)});
    return b.pow(static_cast<unsigned>(e.get_ui()));
  }

  BiPoly base() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = uint_literal();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        Int den = uint_literal();
        if (den == 0) {
          --pos_;
          fail({"nonzero denominator"});
        }
        return BiPoly::constant(make_rat(num, den));
      }
      return BiPoly::constant(Rat(num));
    }
    if (c == 'x') {
      ++pos_;
      return BiPoly::x();
    }
    if (c == 't') {
      if (!allow_t_) fail({"'x'", "integer", "'('"});
      ++pos_;
      return BiPoly::t();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'", "'^'"});
      ++pos_;
      return inner;
    }
    if (allow_t_) fail({"integer", "'x'", "'t'", "'('"});
    fail({"integer", "'x'", "'('"});
  }

  Int uint_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail({"unsigned integer"});
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_ + 1, std::move(expected), found);
  }

  std::string_view text_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

void append_term(std::string& out, const Rat& c, const std::string& monomial) {
  bool negative = c < 0;
  Rat mag = negative ? Rat(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (monomial.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += to_string(mag) + "*" + monomial;
  }
}

std::string power(char v, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, v);
  return std::string(1, v) + "^" + std::to_string(e);
}

}  // namespace

ParseError::ParseError(std::size_t column, std::set<std::string> expected, std::string found)
    : std::runtime_error("syntax error at column " + std::to_string(column) + ": found " + found +
                         ", expected one of " + describe(expected)),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

BiPoly parse_bipoly(std::string_view text) { return Parser(text, true).run(); }

UniPoly parse_unipoly(std::string_view text) { return Parser(text, false).run().t_coeff(0); }

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  char v = static_cast<char>(p.var());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    append_term(out, it->second, power(v, it->first));
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono = power('x', it->first.first);
    std::string tp = power('t', it->first.second);
    if (!mono.empty() && !tp.empty()) mono += "*";
    append_term(out, it->second, mono + tp);
  }
  return out;
}

}  // namespace discknot
