#include "hoqmc/gfq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hoqmc {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void require_prime(std::uint32_t q) {
  if (q > kMaxBase || !is_prime(q))
    throw std::invalid_argument("base q=" + std::to_string(q) +
                                " must be a prime <= " + std::to_string(kMaxBase));
}

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q != 0 && r > UINT64_MAX / q) return 0;
    r *= q;
  }
  return r;
}

unsigned max_exact_digits(std::uint32_t q) {
  require_prime(q);
  // log2(q) is irrational for odd q, so the floor is unambiguous; q = 2 is
  // the only exact case.
  if (q == 2) return 52;
  return static_cast<unsigned>(std::floor(52.0 / std::log2(static_cast<double>(q))));
}

Digit digit_inv(Digit a, std::uint32_t q) {
  if (a == 0 || a >= q) throw std::invalid_argument("digit_inv: zero has no inverse");
  // Extended Euclid on (a, q).
  std::int64_t r0 = q, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quo = r0 / r1;
    std::int64_t tmp = r0 - quo * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quo * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += q;
  return static_cast<Digit>(t0);
}

DigitVector DigitVector::zeros(std::uint32_t base, std::size_t length) {
  return DigitVector(base, std::vector<Digit>(length, 0));
}

DigitVector::DigitVector(std::uint32_t base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base < 2) throw std::invalid_argument("DigitVector: base must be >= 2");
  for (Digit d : digits_)
    if (d >= base)
      throw std::invalid_argument("DigitVector: digit " + std::to_string(d) +
                                  " out of range for base " + std::to_string(base));
}

DigitVector DigitVector::from_integer(std::uint64_t k, std::uint32_t q, std::size_t n) {
  std::vector<Digit> d(n, 0);
  std::uint64_t rest = k;
  for (std::size_t i = 0; i < n && rest != 0; ++i) {
    d[i] = static_cast<Digit>(rest % q);
    rest /= q;
  }
  if (rest != 0)
    throw std::out_of_range("int_to_digit_vector: k=" + std::to_string(k) +
                            " does not fit in " + std::to_string(n) + " base-" +
                            std::to_string(q) + " digits");
  return DigitVector(q, std::move(d));
}

DigitVector DigitVector::from_fraction(double x, std::uint32_t q, std::size_t n) {
  if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("from_fraction: x must lie in [0,1)");
  std::vector<Digit> d(n, 0);
  double rest = x;
  for (std::size_t i = 0; i < n; ++i) {
    rest *= q;
    double f = std::floor(rest);
    if (f >= q) f = q - 1;
    d[i] = static_cast<Digit>(f);
    rest -= f;
  }
  return DigitVector(q, std::move(d));
}

std::uint64_t DigitVector::to_integer() const {
  std::uint64_t k = 0;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (k > (UINT64_MAX - digits_[i]) / base_)
      throw std::out_of_range("DigitVector::to_integer: overflow");
    k = k * base_ + digits_[i];
  }
  return k;
}

std::uint64_t DigitVector::fraction_numerator() const {
  if (checked_pow(base_, static_cast<unsigned>(digits_.size())) == 0)
    throw std::out_of_range("DigitVector::fraction_numerator: overflow");
  std::uint64_t x = 0;
  for (Digit d : digits_) x = x * base_ + d;
  return x;
}

double DigitVector::to_fraction() const {
  const std::uint64_t denom = checked_pow(base_, static_cast<unsigned>(digits_.size()));
  if (denom != 0 && denom <= (std::uint64_t{1} << 53)) {
    // Numerator and denominator are exact doubles: one rounding at most.
    return static_cast<double>(fraction_numerator()) / static_cast<double>(denom);
  }
  double x = 0.0;
  for (std::size_t i = digits_.size(); i-- > 0;) x = (x + digits_[i]) / base_;
  return x;
}

bool DigitVector::is_zero() const {
  for (Digit d : digits_)
    if (d != 0) return false;
  return true;
}

DigitVector DigitVector::resized(std::size_t length) const {
  std::vector<Digit> d(digits_.begin(),
                       digits_.begin() + static_cast<std::ptrdiff_t>(std::min(length, digits_.size())));
  d.resize(length, 0);
  return DigitVector(base_, std::move(d));
}

namespace {
void require_same_shape(const DigitVector& x, const DigitVector& y, const char* op) {
  if (x.base() != y.base() || x.size() != y.size())
    throw std::invalid_argument(std::string(op) + ": base or length mismatch");
}
}  // namespace

DigitVector oplus(const DigitVector& x, const DigitVector& y) {
  require_same_shape(x, y, "oplus");
  std::vector<Digit> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = digit_add(x[i], y[i], x.base());
  return DigitVector(x.base(), std::move(z));
}

DigitVector ominus(const DigitVector& x) {
  std::vector<Digit> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = digit_neg(x[i], x.base());
  return DigitVector(x.base(), std::move(z));
}

DigitVector ominus(const DigitVector& x, const DigitVector& y) {
  require_same_shape(x, y, "ominus");
  return oplus(x, ominus(y));
}

std::uint64_t int_oplus(std::uint64_t k, std::uint64_t l, std::uint32_t q) {
  std::uint64_t out = 0, place = 1;
  while (k != 0 || l != 0) {
    out += place * digit_add(static_cast<Digit>(k % q), static_cast<Digit>(l % q), q);
    k /= q;
    l /= q;
    place *= q;
  }
  return out;
}

std::uint64_t int_ominus(std::uint64_t k, std::uint64_t l, std::uint32_t q) {
  std::uint64_t out = 0, place = 1;
  while (k != 0 || l != 0) {
    out += place * digit_sub(static_cast<Digit>(k % q), static_cast<Digit>(l % q), q);
    k /= q;
    l /= q;
    place *= q;
  }
  return out;
}

}  // namespace hoqmc
