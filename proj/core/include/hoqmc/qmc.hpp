#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hoqmc/netgen.hpp"
#include "hoqmc/walsh.hpp"

namespace hoqmc {

inline constexpr int kUnboundedSmoothness = std::numeric_limits<int>::max();

/// An integrand on [0,1)^s with a closed-form integral.
struct TestFunction {
  std::string name;
  std::size_t s = 1;
  RealFunction evaluate;
  double exact_integral = 0.0;
  /// Highest order of mixed partial derivatives that exist.
  int smoothness_delta = kUnboundedSmoothness;
};

/// Products over coordinates of:
///   half-minus-x  1/2 - x            (integral 0)
///   x-squared     x^2                (integral 3^-s)
///   exp           e^x / (e - 1)      (integral 1)
///   sin           sin(pi x) pi / 2   (integral 1)
std::vector<TestFunction> builtin_test_functions(std::size_t s);
/// Throws std::invalid_argument for an unknown name.
TestFunction builtin_test_function(const std::string& name, std::size_t s);
std::vector<std::string> builtin_test_function_names();

/// Real part of wal_kvec at n digits per coordinate; the exact integral is
/// 1 for kvec = 0 and 0 otherwise.
TestFunction walsh_test_function(std::vector<std::uint64_t> kvec, std::uint32_t q, std::size_t n);

/// Tree summation; the result does not depend on how the input was produced.
double pairwise_sum(std::span<const double> values);

/// Float value of a coordinate from its most significant min(n, n_max)
/// digits.
double coordinate_value(const DigitVector& x);

/// Q(f) = q^-m sum_h f(x_h (+) shift). Throws std::invalid_argument if
/// f.s, the net and the shift disagree in shape.
double qmc_integrate(const TestFunction& f, const DigitalNet& net,
                     const std::optional<Point>& shift = std::nullopt);

/// q^-m sum_h wal_kvec(x_h (+) shift), computed on digits. Equals 1 when kvec
/// is 0 or in the dual net (without shift) and 0 otherwise.
std::complex<double> character_sum(const DigitalNet& net, std::span<const std::uint64_t> kvec,
                                   const std::optional<Point>& shift = std::nullopt);

/// xorshift64* seeded through splitmix64. The exact output sequence is part
/// of the file-format contract, so it is implemented here rather than taken
/// from <random>.
class ShiftRegisterRng {
 public:
  explicit ShiftRegisterRng(std::uint64_t seed);
  std::uint64_t next_u64();
  /// Uniform on [0, q) by rejection.
  Digit uniform_digit(std::uint32_t q);

 private:
  std::uint64_t state_;
};

/// s digit vectors of length n with uniform digits.
Point random_digital_shift(std::uint32_t q, std::size_t n, std::size_t s, ShiftRegisterRng& rng);
Point random_digital_shift(std::uint32_t q, std::size_t n, std::size_t s, std::uint64_t seed);

struct ConvergenceRow {
  std::size_t m;
  std::uint64_t N;
  double error;
  /// Fitted slope over rows up to this one; NaN while undefined.
  double slope_so_far;
};

struct ConvergenceTable {
  std::uint32_t q = 2;
  std::vector<ConvergenceRow> rows;
  double fitted_slope = 0.0;

  /// "m,N,error,slope_so_far" followed by one line per row.
  std::string to_csv() const;
};

using NetFamily = std::function<DigitalNet(std::size_t m)>;

/// Least-squares slope of log_q(error) against m over the rows, dropping
/// the two smallest m and any zero error. NaN with fewer than two points.
double fit_log_slope(std::span<const ConvergenceRow> rows, std::uint32_t q);

/// For m = m_min..m_max: error = |Q - I| when shifts = 0, otherwise the root
/// mean square over `shifts` random digital shifts drawn in order from one
/// generator seeded with `seed`. Throws std::domain_error if the final
/// slope is undefined (e.g. every error is zero).
ConvergenceTable convergence_study(const TestFunction& f, const NetFamily& family,
                                   std::size_t m_min, std::size_t m_max, std::size_t shifts,
                                   std::uint64_t seed);

}  // namespace hoqmc
