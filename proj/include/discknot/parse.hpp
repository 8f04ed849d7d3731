#pragma once

// Text form of polynomials.
//
//   expr     := [('+'|'-')] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
//   var      := 'x' | 't'
//
// Whitespace is insignificant. Implicit multiplication ("2x") is rejected.
// The optional leading sign makes printed polynomials with a negative
// leading coefficient parse back.

#include "discknot/poly.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace discknot {

class ParseError : public std::runtime_error {
 public:
  /// `column` is 1-based; `expected` lists the tokens that would have been accepted.
  ParseError(std::size_t column, std::set<std::string> expected, std::string found);

  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t column_;
  std::set<std::string> expected_;
  std::string found_;
};

BiPoly parse_bipoly(std::string_view text);
/// Like parse_bipoly but rejects the variable t.
UniPoly parse_unipoly(std::string_view text);

/// Canonical text: terms by decreasing exponent (x first, then t).
std::string to_string(const UniPoly& p);
std::string to_string(const BiPoly& p);

}  // namespace discknot
