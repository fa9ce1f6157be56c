#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hoqmc {

/// Exact non-negative rational used for the net parameter beta.
class Rational {
 public:
  constexpr Rational() = default;
  /// Throws std::invalid_argument on a zero or negative denominator.
  Rational(std::int64_t num, std::int64_t den);
  static Rational integer(std::int64_t v) { return Rational(v, 1); }
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// floor(this * k) for integer k >= 0.
  std::int64_t floor_times(std::int64_t k) const;

  /// "p/q" with q printed even when it is 1.
  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational min(const Rational& a, const Rational& b);

}  // namespace hoqmc
