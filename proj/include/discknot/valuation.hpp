#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace discknot {

/// A nonnegative order of vanishing, or the tagged value ∞ (zero polynomial,
/// non-isolated singularity). Never encoded as a large integer.
class Valuation {
 public:
  constexpr Valuation() = default;  // ∞
  constexpr explicit Valuation(int v) : value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Throws std::bad_optional_access when infinite.
  constexpr int value() const { return value_.value(); }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

  friend constexpr Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

 private:
  std::optional<int> value_;
};

}  // namespace discknot
