#include "hoqmc/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace hoqmc {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string format_coordinate(const DigitVector& x) {
  const std::uint32_t q = x.base();
  const std::uint64_t den = checked_pow(q, static_cast<unsigned>(x.size()));
  if ((q == 2 || q == 5) && den != 0) {
    __extension__ typedef unsigned __int128 wide;
    const std::uint64_t num = x.fraction_numerator();
    if (num == 0) return "0";
    std::string out = "0.";
    wide rem = num;
    while (rem != 0) {
      rem *= 10;
      out.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
      rem %= den;
    }
    return out;
  }
  const auto depth = std::min<std::size_t>(x.size(), max_exact_digits(q));
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x.resized(depth).to_fraction());
  return buf.data();
}

}  // namespace hoqmc
