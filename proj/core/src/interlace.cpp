#include "hoqmc/interlace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hoqmc {

namespace {

void require_divisible(std::size_t s, std::size_t d) {
  if (d == 0) throw std::invalid_argument("interlacing factor d must be >= 1");
  if (s % d != 0)
    throw std::invalid_argument("source has " + std::to_string(s) +
                                " coordinates, which is not divisible by d=" + std::to_string(d));
}

}  // namespace

InterlaceSpec::InterlaceSpec(DigitalNet source, std::size_t d) : source_(std::move(source)), d_(d) {
  require_divisible(source_.s(), d_);
  if (source_.n() != source_.m())
    throw std::invalid_argument("interlacing needs square source matrices, got " +
                                std::to_string(source_.n()) + "x" + std::to_string(source_.m()));
}

DigitalNet InterlaceSpec::apply() const { return interleave_matrices(source_, d_); }

DigitalNet interleave_matrices(const DigitalNet& source, std::size_t d) {
  require_divisible(source.s(), d);
  if (source.n() != source.m())
    throw std::invalid_argument("interlacing needs square source matrices, got " +
                                std::to_string(source.n()) + "x" + std::to_string(source.m()));
  const std::size_t n = source.n();
  const std::size_t m = source.m();
  std::vector<GenMatrix> out;
  for (std::size_t j = 0; j < source.s() / d; ++j) {
    std::vector<Digit> entries;
    entries.reserve(d * n * m);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < d; ++u) {
        const auto row = source.matrix(j * d + u).row(v);
        entries.insert(entries.end(), row.begin(), row.end());
      }
    out.emplace_back(source.base(), d * n, m, std::move(entries));
  }
  return DigitalNet(std::move(out));
}

Point interleave_point(const Point& x, std::size_t d) {
  require_divisible(x.size(), d);
  if (x.empty()) return {};
  const std::uint32_t q = x.front().base();
  const std::size_t len = x.front().size();
  for (const auto& c : x)
    if (c.size() != len || c.base() != q)
      throw std::invalid_argument("interleave_point: coordinates differ in length or base");
  Point y;
  for (std::size_t j = 0; j < x.size() / d; ++j) {
    std::vector<Digit> digits(d * len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t k = 0; k < d; ++k) digits[i * d + k] = x[j * d + k][i];
    y.emplace_back(q, std::move(digits));
  }
  return y;
}

DigitalSequence interleave_sequence(const DigitalSequence& source, std::size_t d) {
  require_divisible(source.s(), d);
  return DigitalSequence(
      source.base(), source.s() / d,
      [source, d](std::size_t coord, std::size_t row, std::size_t cols) {
        return source.row(coord * d + row % d, row / d, cols);
      },
      source.max_rows() * d, source.max_cols());
}

unsigned predicted_t(unsigned t_prime, unsigned alpha, unsigned d, unsigned s) {
  if (alpha == 0 || d == 0 || s == 0)
    throw std::invalid_argument("predicted_t needs alpha, d, s >= 1");
  const unsigned a = std::min(alpha, d);
  return a * t_prime + (s * (d - 1) * a + 1) / 2;
}

Rational predicted_beta(unsigned alpha, unsigned d) {
  if (alpha == 0 || d == 0) throw std::invalid_argument("predicted_beta needs alpha, d >= 1");
  return min(Rational::integer(1), Rational(alpha, d));
}

}  // namespace hoqmc
