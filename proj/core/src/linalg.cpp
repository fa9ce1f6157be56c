#include "hoqmc/linalg.hpp"

#include <stdexcept>

namespace hoqmc {

EchelonBasis::EchelonBasis(std::uint32_t q, std::size_t width) : q_(q), width_(width) {}

bool EchelonBasis::insert(std::span<const Digit> row) {
  if (row.size() != width_) throw std::invalid_argument("EchelonBasis: row width mismatch");
  DigitRow r(row.begin(), row.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Digit c = r[pivots_[i]];
    if (c == 0) continue;
    const Digit f = digit_neg(c, q_);
    const DigitRow& b = rows_[i];
    for (std::size_t j = pivots_[i]; j < width_; ++j)
      if (b[j] != 0) r[j] = digit_add(r[j], digit_mul(f, b[j], q_), q_);
  }
  std::size_t p = 0;
  while (p < width_ && r[p] == 0) ++p;
  if (p == width_) return false;
  const Digit inv = digit_inv(r[p], q_);
  for (std::size_t j = p; j < width_; ++j) r[j] = digit_mul(r[j], inv, q_);
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(const std::vector<DigitRow>& rows, std::uint32_t q) {
  if (rows.empty()) return 0;
  EchelonBasis basis(q, rows.front().size());
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

std::vector<DigitRow> kernel_basis(const std::vector<DigitRow>& a, std::size_t cols,
                                   std::uint32_t q) {
  // Reduced row echelon form by Gauss-Jordan elimination.
  std::vector<DigitRow> m = a;
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("kernel_basis: ragged matrix");
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Digit inv = digit_inv(m[row][c], q);
    for (auto& v : m[row]) v = digit_mul(v, inv, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Digit f = digit_neg(m[i][c], q);
      for (std::size_t j = c; j < cols; ++j)
        if (m[row][j] != 0) m[i][j] = digit_add(m[i][j], digit_mul(f, m[row][j], q), q);
    }
    pivot_cols.push_back(c);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<DigitRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    DigitRow v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = digit_neg(m[i][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hoqmc
