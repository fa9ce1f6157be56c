#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hoqmc/gfq.hpp"

namespace hoqmc {

using DigitRow = std::vector<Digit>;

/// Incrementally maintained row-echelon basis over F_q.
///
/// insert() reduces a row against the current basis and keeps it when it
/// is independent. The object is a plain value, so recursive searches
/// backtrack by copying.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t q, std::size_t width);

  /// True (and the row is kept) iff the row is independent of the basis.
  bool insert(std::span<const Digit> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  std::uint32_t base() const { return q_; }

 private:
  std::uint32_t q_;
  std::size_t width_;
  std::vector<DigitRow> rows_;       // each normalized: pivot entry 1
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

/// Rank of a set of equal-length rows over F_q.
std::size_t rank(const std::vector<DigitRow>& rows, std::uint32_t q);

/// Basis of the right kernel {x : A x = 0} of an r x c matrix given by rows.
/// Returned vectors have length c; the basis is in reduced form (one free
/// column per vector, carrying a 1).
std::vector<DigitRow> kernel_basis(const std::vector<DigitRow>& a, std::size_t cols,
                                   std::uint32_t q);

}  // namespace hoqmc
