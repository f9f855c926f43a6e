#pragma once

#include <cstdint>
#include <string>

namespace eccert {

// Non-negative rational num/den in lowest terms, den > 0.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // floor(x * num / den) for x >= 0.
  std::int64_t scale_floor(std::int64_t x) const { return x * num / den; }
};

// Parses "a/b", a decimal such as "0.8", or an integer. Throws
// std::invalid_argument on malformed or negative input.
Ratio parse_ratio(const std::string& text);

std::string to_string(const Ratio& r);

}  // namespace eccert
