#include "hoqmc/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hoqmc {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor_times(std::int64_t k) const {
  const std::int64_t p = num_ * k;
  std::int64_t f = p / den_;
  if (p % den_ != 0 && p < 0) --f;
  return f;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace hoqmc
