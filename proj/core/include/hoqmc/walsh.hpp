#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hoqmc/gfq.hpp"

namespace hoqmc {

/// One nonzero base-q digit of a wavenumber: kappa * q^(position - 1).
struct WaveTerm {
  Digit kappa;
  unsigned position;
  friend bool operator==(const WaveTerm&, const WaveTerm&) = default;
};

/// Canonical decomposition k = kappa_1 q^(a_1 - 1) + ... + kappa_v q^(a_v - 1)
/// with a_1 > ... > a_v >= 1 and every kappa_i nonzero. k = 0 has no terms.
struct WaveNumber {
  std::uint64_t k = 0;
  std::uint32_t q = 2;
  std::vector<WaveTerm> terms;  // most significant first

  std::size_t v() const { return terms.size(); }
  /// a_1, or 0 when k = 0.
  unsigned highest_position() const { return terms.empty() ? 0 : terms.front().position; }
};

WaveNumber decompose(std::uint64_t k, std::uint32_t q);

/// a_1 of k (number of base-q digits of k), 0 for k = 0.
unsigned highest_position(std::uint64_t k, std::uint32_t q);

/// Smoothness theta > 1 split into an integer part delta and a fraction
/// lambda in (0, 1]. Integer theta gives delta = theta - 1 and lambda = 1.
class SmoothnessParam {
 public:
  /// Throws std::invalid_argument unless theta > 1.
  static SmoothnessParam from_theta(double theta);
  /// Integer order alpha >= 1 (delta = alpha - 1, lambda = 1). alpha = 1 is
  /// the classical metric used by t-value duality, which is why it is
  /// admitted here although from_theta requires theta > 1.
  static SmoothnessParam integer_order(unsigned alpha);

  double theta() const { return theta_; }
  unsigned delta() const { return delta_; }
  double lambda() const { return lambda_; }
  bool is_integer() const { return lambda_ == 1.0; }
  /// ceil(theta): the alpha a net must be certified for.
  unsigned ceil_theta() const { return delta_ + 1; }

 private:
  SmoothnessParam(double theta, unsigned delta, double lambda)
      : theta_(theta), delta_(delta), lambda_(lambda) {}
  double theta_;
  unsigned delta_;
  double lambda_;
};

/// mu_{q,delta+lambda}(k): 0 for k = 0, a_1 + ... + a_v when v <= delta,
/// otherwise a_1 + ... + a_delta + lambda * a_{delta+1}.
double mu(std::uint64_t k, std::uint32_t q, const SmoothnessParam& sp);
double mu_vec(std::span<const std::uint64_t> kvec, std::uint32_t q, const SmoothnessParam& sp);
/// q^(-mu_vec).
double r_weight(std::span<const std::uint64_t> kvec, std::uint32_t q, const SmoothnessParam& sp);

/// Integer metric mu_{q,alpha}: sum of the alpha most significant nonzero
/// digit positions of k.
unsigned mu_alpha(std::uint64_t k, std::uint32_t q, unsigned alpha);
unsigned mu_alpha_vec(std::span<const std::uint64_t> kvec, std::uint32_t q, unsigned alpha);

/// sum_l kappa_l x_{l+1} mod q, the exponent of wal_k(x). Throws
/// std::invalid_argument if x has fewer digits than highest_position(k).
Digit wal_exponent(std::uint64_t k, const DigitVector& x);

/// exp(2 pi i e / q). Exactly 1 for e = 0 and exactly -1 for q = 2, e = 1.
std::complex<double> root_of_unity(Digit e, std::uint32_t q);

/// wal_k(x) for a point x stored most-significant-digit first.
std::complex<double> wal_eval(std::uint64_t k, const DigitVector& x);
/// Product of coordinate Walsh functions. Throws on dimension mismatch.
std::complex<double> wal_eval_multi(std::span<const std::uint64_t> kvec, const Point& x);

using RealFunction = std::function<double(std::span<const double>)>;

/// Walsh coefficient f^(k) = integral of f * conj(wal_k) over [0,1)^s.
///
/// The unit cube is cut into the q^(M s) cells of side q^-M. wal_k is
/// constant on every cell, so the only approximation is an 8-point
/// Gauss-Legendre tensor rule for f on each cell (exact for polynomials of
/// degree <= 15 per coordinate). Requires M > highest_position(k_j) for
/// every j; throws CapExceeded if q^(M s) > 2^22.
std::complex<double> walsh_coefficient(const RealFunction& f, std::span<const std::uint64_t> kvec,
                                       std::uint32_t q, unsigned resolution);

/// J_k(x) = integral_0^x conj(wal_k(y)) dy, evaluated exactly by summing
/// over the q-adic cells of [0, x) on which wal_k is constant.
std::complex<double> j_function_direct(std::uint64_t k, const DigitVector& x);

struct JSeriesValue {
  std::complex<double> value;
  /// Upper bound on the modulus of the omitted tail.
  double truncation_bound;
};

/// J_k(x) from its Walsh series, keeping tail_terms blocks of the
/// geometric part. Identity bijection, prime q.
JSeriesValue j_function_series(std::uint64_t k, const DigitVector& x, unsigned tail_terms = 40);

}  // namespace hoqmc
