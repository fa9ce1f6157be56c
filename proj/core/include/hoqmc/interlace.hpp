#pragma once

#include <cstddef>

#include "hoqmc/gfq.hpp"
#include "hoqmc/netgen.hpp"
#include "hoqmc/rational.hpp"

namespace hoqmc {

/// Interlacing of d * target_s source coordinates into target_s coordinates.
class InterlaceSpec {
 public:
  /// Throws std::invalid_argument unless d >= 1, source.s() is divisible by
  /// d and the source matrices are square.
  InterlaceSpec(DigitalNet source, std::size_t d);

  std::size_t d() const { return d_; }
  std::size_t target_s() const { return source_.s() / d_; }
  const DigitalNet& source() const { return source_; }

  DigitalNet apply() const;

 private:
  DigitalNet source_;
  std::size_t d_;
};

/// Row l = (v-1) d + u of C_j^(d) is row v of source matrix (j-1) d + u
/// (1-based). An n x m source yields d n x m matrices; square sources are
/// required.
DigitalNet interleave_matrices(const DigitalNet& source, std::size_t d);

/// Digit (i-1) d + k of output coordinate j is digit i of input coordinate
/// (j-1) d + k. Used as an independent check of interleave_matrices.
Point interleave_point(const Point& x, std::size_t d);

/// Sequence whose prefixes are interleaved prefixes of the source.
DigitalSequence interleave_sequence(const DigitalSequence& source, std::size_t d);

/// min(alpha, d) t' + ceil(s (d-1) min(alpha, d) / 2).
unsigned predicted_t(unsigned t_prime, unsigned alpha, unsigned d, unsigned s);

/// min(1, alpha / d).
Rational predicted_beta(unsigned alpha, unsigned d);

}  // namespace hoqmc
