#include "eccert/ratio.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace eccert {

Ratio parse_ratio(const std::string& text) {
  const auto parse_int = [&text](std::string_view s) {
    std::int64_t x = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || x < 0) {
      throw std::invalid_argument("malformed ratio '" + text + "'");
    }
    return x;
  };
  const std::string_view s = text;
  Ratio r;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    r.num = parse_int(s.substr(0, slash));
    r.den = parse_int(s.substr(slash + 1));
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 9) throw std::invalid_argument("ratio '" + text + "' has too many digits");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    const std::int64_t whole = dot == 0 ? 0 : parse_int(s.substr(0, dot));
    r.num = whole * r.den + (frac.empty() ? 0 : parse_int(frac));
  } else {
    r.num = parse_int(s);
    r.den = 1;
  }
  if (r.den <= 0 || r.den > 1000000000 || r.num > 1000000000) {
    throw std::invalid_argument("ratio '" + text + "' out of range");
  }
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 0) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string to_string(const Ratio& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace eccert
