#pragma once

#include <string>

#include "hoqmc/gfq.hpp"

namespace hoqmc {

/// Shortest decimal that round-trips to the same double; "nan", "inf",
/// "-inf" for non-finite values.
std::string format_double(double x);

/// Decimal value of a point coordinate. Exact when q is 2 or 5 and q^n fits
/// in 64 bits (the expansion terminates); otherwise the first
/// max_exact_digits(q) digits are converted and printed with 17
/// significant digits.
std::string format_coordinate(const DigitVector& x);

}  // namespace hoqmc
