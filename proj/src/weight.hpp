#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mwpsp {

/// Nonnegative edge weight held as a scaled integer (micro-units) so sums and
/// comparisons are exact for decimal inputs with up to six fractional digits.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;

  constexpr Weight() = default;

  static constexpr Weight from_units(std::int64_t units) { return Weight(units); }
  static constexpr Weight from_integer(std::int64_t value) { return Weight(value * kScale); }

  /// Parses "12", "0.5", "3.250". Rejects signs, exponents and more than six
  /// fractional digits.
  static Weight parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  double to_double() const { return static_cast<double>(units_) / kScale; }

  /// Shortest exact decimal form: "24", "3.5", "-1.25".
  std::string to_string() const;

  constexpr Weight& operator+=(Weight other) {
    units_ += other.units_;
    return *this;
  }
  constexpr Weight& operator-=(Weight other) {
    units_ -= other.units_;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, Weight b) { return a += b; }
  friend constexpr Weight operator-(Weight a, Weight b) { return a -= b; }
  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  constexpr explicit Weight(std::int64_t units) : units_(units) {}
  std::int64_t units_ = 0;
};

}  // namespace mwpsp
