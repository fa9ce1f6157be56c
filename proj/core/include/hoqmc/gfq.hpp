#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hoqmc {

/// A digit in Z_q = {0, ..., q-1}. With q prime and the identity bijection,
/// Z_q is the prime field F_q and digits are field elements.
using Digit = std::uint32_t;

/// Largest supported base. Products of two digits must fit in 32 bits.
inline constexpr std::uint32_t kMaxBase = 65521;

bool is_prime(std::uint32_t q);

/// Throws std::invalid_argument unless q is a prime <= kMaxBase.
void require_prime(std::uint32_t q);

/// q^e, or 0 if the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t q, unsigned e);

/// Number of base-q digits that survive an exact conversion to a binary64
/// fraction: floor(52 / log2 q).
unsigned max_exact_digits(std::uint32_t q);

// Field arithmetic. Arguments must already be reduced (< q).
inline Digit digit_add(Digit a, Digit b, std::uint32_t q) {
  const Digit s = a + b;
  return s >= q ? s - q : s;
}
inline Digit digit_neg(Digit a, std::uint32_t q) { return a == 0 ? 0 : q - a; }
inline Digit digit_sub(Digit a, Digit b, std::uint32_t q) {
  return digit_add(a, digit_neg(b, q), q);
}
inline Digit digit_mul(Digit a, Digit b, std::uint32_t q) {
  return static_cast<Digit>((static_cast<std::uint64_t>(a) * b) % q);
}
/// Multiplicative inverse; a must be nonzero.
Digit digit_inv(Digit a, std::uint32_t q);

/// A fixed-length vector of base-q digits.
///
/// The container itself carries no positional meaning. Two conventions are
/// used throughout the library and always go through the named
/// constructors below:
///   * points store the most significant digit first, so element 0 is the
///     q^-1 digit of x = x_1/q + x_2/q^2 + ...;
///   * integers (wavenumbers, point indices) store the least significant
///     digit first, so element 0 is the q^0 digit of k.
class DigitVector {
 public:
  /// All-zero vector. A named factory so that DigitVector(q, {1}) always
  /// means the digit list {1}.
  static DigitVector zeros(std::uint32_t base, std::size_t length);
  /// Throws std::invalid_argument if any digit is >= base.
  DigitVector(std::uint32_t base, std::vector<Digit> digits);

  /// Digits of k, least significant first. Throws std::out_of_range if
  /// k >= q^n.
  static DigitVector from_integer(std::uint64_t k, std::uint32_t q, std::size_t n);

  /// The first n digits of x in [0,1), most significant first (truncation).
  static DigitVector from_fraction(double x, std::uint32_t q, std::size_t n);

  /// Inverse of from_integer.
  std::uint64_t to_integer() const;

  /// sum_i d_i q^{-i}; exact whenever size() <= max_exact_digits(base()).
  double to_fraction() const;

  /// Integer numerator X of the point X / q^size(). Requires q^size() to fit
  /// in 64 bits.
  std::uint64_t fraction_numerator() const;

  std::uint32_t base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }
  bool is_zero() const;

  /// Copy truncated or zero-padded to the given length.
  DigitVector resized(std::size_t length) const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  std::uint32_t base_;
  std::vector<Digit> digits_;
};

/// Least-significant-first digit vector of k.
inline DigitVector int_to_digit_vector(std::uint64_t k, std::uint32_t q, std::size_t n) {
  return DigitVector::from_integer(k, q, n);
}

/// Digit-wise field sum. Base and length must match.
DigitVector oplus(const DigitVector& x, const DigitVector& y);
/// Digit-wise field negation.
DigitVector ominus(const DigitVector& x);
/// x oplus (ominus y).
DigitVector ominus(const DigitVector& x, const DigitVector& y);

/// Digit-wise sum of the base-q expansions of two integers (k oplus l).
std::uint64_t int_oplus(std::uint64_t k, std::uint64_t l, std::uint32_t q);
/// Digit-wise difference k ominus l.
std::uint64_t int_ominus(std::uint64_t k, std::uint64_t l, std::uint32_t q);

/// One point of an s-dimensional digital point set.
using Point = std::vector<DigitVector>;

}  // namespace hoqmc
