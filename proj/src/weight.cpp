#include "weight.hpp"

#include <limits>

#include "error.hpp"

namespace mwpsp {

Weight Weight::parse(std::string_view text) {
  const std::string shown(text);
  if (text.empty()) throw Error(Errc::parse_error, "empty weight");

  std::int64_t whole = 0;
  std::size_t pos = 0;
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / kScale / 10;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > kLimit) throw Error(Errc::parse_error, "weight too large: " + shown);
    ++pos;
  }
  if (pos == 0) throw Error(Errc::parse_error, "malformed weight: " + shown);

  std::int64_t fraction = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (++digits > kFractionDigits) {
        throw Error(Errc::parse_error, "more than 6 fractional digits: " + shown);
      }
      fraction = fraction * 10 + (text[pos] - '0');
      ++pos;
    }
    if (digits == 0) throw Error(Errc::parse_error, "malformed weight: " + shown);
    for (; digits < kFractionDigits; ++digits) fraction *= 10;
  }
  if (pos != text.size()) throw Error(Errc::parse_error, "malformed weight: " + shown);
  return Weight(whole * kScale + fraction);
}

std::string Weight::to_string() const {
  std::int64_t magnitude = units_ < 0 ? -units_ : units_;
  std::string out = units_ < 0 ? "-" : "";
  out += std::to_string(magnitude / kScale);
  std::int64_t fraction = magnitude % kScale;
  if (fraction != 0) {
    std::string digits = std::to_string(fraction);
    digits.insert(0, static_cast<std::size_t>(kFractionDigits) - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace mwpsp
