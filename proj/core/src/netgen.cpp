#include "hoqmc/netgen.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hoqmc/error.hpp"

namespace hoqmc {

namespace {

constexpr std::size_t kSequenceDepth = 64;

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

// binom(c, r) mod q for 0 <= r, c < size, row-major by r.
std::vector<Digit> pascal_mod(std::size_t size, std::uint32_t q) {
  std::vector<Digit> t(size * size, 0);
  for (std::size_t c = 0; c < size; ++c) {
    t[c] = 1 % q;  // binom(c, 0)
    for (std::size_t r = 1; r <= c; ++r)
      t[r * size + c] = digit_add(t[(r - 1) * size + (c - 1)], t[r * size + (c - 1)], q);
  }
  return t;
}

DigitRow faure_row(std::uint32_t q, std::size_t coord, std::size_t row, std::size_t cols) {
  const std::size_t size = std::max(row + 1, cols);
  const auto binom = pascal_mod(size, q);
  const auto shift = static_cast<Digit>(coord % q);
  DigitRow out(cols, 0);
  for (std::size_t c = row; c < cols; ++c) {
    Digit p = 1;
    for (std::size_t e = 0; e < c - row; ++e) p = digit_mul(p, shift, q);
    out[c] = digit_mul(binom[row * size + c], p, q);
  }
  return out;
}

DigitRow sobol_row(std::size_t coord, std::size_t row, std::size_t cols) {
  // Column c holds the binary expansion of v_{c+1} = m_{c+1} / 2^(c+1);
  // row l (0-based) is bit c - l of m_{c+1}.
  const auto m = sobol_direction_integers(coord + 1, cols);
  DigitRow out(cols, 0);
  for (std::size_t c = row; c < cols; ++c) out[c] = static_cast<Digit>((m[c] >> (c - row)) & 1u);
  return out;
}

}  // namespace

GenMatrix::GenMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  require_prime(q);
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("generating matrix must have at least one row and column, got " +
                                shape(rows, cols));
}

GenMatrix::GenMatrix(std::uint32_t q, std::size_t rows, std::size_t cols,
                     std::vector<Digit> entries)
    : GenMatrix(q, rows, cols) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("generating matrix " + shape(rows, cols) + " given " +
                                std::to_string(entries.size()) + " entries");
  for (auto e : entries)
    if (e >= q)
      throw std::invalid_argument("matrix entry " + std::to_string(e) + " is not a digit mod " +
                                  std::to_string(q));
  entries_ = std::move(entries);
}

GenMatrix GenMatrix::identity(std::uint32_t q, std::size_t rows, std::size_t cols) {
  GenMatrix g(q, rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) g.entries_[i * cols + i] = 1;
  return g;
}

void GenMatrix::set(std::size_t r, std::size_t c, Digit v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("GenMatrix::set index out of range");
  if (v >= q_) throw std::invalid_argument("GenMatrix::set value is not a digit");
  entries_[r * cols_ + c] = v;
}

GenMatrix GenMatrix::top_left(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_)
    throw std::out_of_range("submatrix " + shape(rows, cols) + " exceeds " + shape(rows_, cols_));
  GenMatrix g(q_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g.entries_[r * cols + c] = (*this)(r, c);
  return g;
}

DigitalNet::DigitalNet(std::vector<GenMatrix> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw std::invalid_argument("digital net needs at least one matrix");
  q_ = matrices_.front().base();
  n_ = matrices_.front().rows();
  m_ = matrices_.front().cols();
  for (std::size_t j = 1; j < matrices_.size(); ++j) {
    const auto& c = matrices_[j];
    if (c.base() != q_ || c.rows() != n_ || c.cols() != m_)
      throw std::invalid_argument("matrix " + std::to_string(j + 1) + " is " +
                                  shape(c.rows(), c.cols()) + " over F_" +
                                  std::to_string(c.base()) + ", expected " + shape(n_, m_) +
                                  " over F_" + std::to_string(q_));
  }
  num_points_ = checked_pow(q_, static_cast<unsigned>(m_));
  if (num_points_ == 0 || m_ > 64)
    throw std::out_of_range("q^m = " + std::to_string(q_) + "^" + std::to_string(m_) +
                            " does not fit in 64 bits");
}

Point DigitalNet::point(std::uint64_t h) const {
  if (h >= num_points_)
    throw std::out_of_range("point index " + std::to_string(h) + " >= q^m = " +
                            std::to_string(num_points_));
  const auto hv = DigitVector::from_integer(h, q_, m_);
  Point x;
  x.reserve(matrices_.size());
  for (const auto& c : matrices_) {
    std::vector<Digit> digits(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      std::uint64_t acc = 0;
      const auto row = c.row(r);
      for (std::size_t k = 0; k < m_; ++k) acc += static_cast<std::uint64_t>(row[k]) * hv[k];
      digits[r] = static_cast<Digit>(acc % q_);
    }
    x.emplace_back(q_, std::move(digits));
  }
  return x;
}

std::vector<Point> DigitalNet::points() const {
  if (num_points_ > kPointCap)
    throw CapExceeded("net has " + std::to_string(num_points_) +
                      " points, more than the materialization cap 2^22");
  std::vector<Point> out;
  out.reserve(num_points_);
  for (std::uint64_t h = 0; h < num_points_; ++h) out.push_back(point(h));
  return out;
}

DigitalNet DigitalNet::project(std::span<const std::size_t> coords) const {
  std::vector<GenMatrix> sel;
  for (auto j : coords) sel.push_back(matrix(j));
  return DigitalNet(std::move(sel));
}

DigitalNet DigitalNet::truncate_rows(std::size_t rows) const {
  std::vector<GenMatrix> sel;
  for (const auto& c : matrices_) sel.push_back(c.top_left(rows, m_));
  return DigitalNet(std::move(sel));
}

DigitalNet identity_net(std::uint32_t q, std::size_t m, std::size_t s) {
  if (s == 0) throw std::invalid_argument("dimension s must be >= 1");
  return DigitalNet(std::vector<GenMatrix>(s, GenMatrix::identity(q, m, m)));
}

DigitalNet faure_matrices(std::uint32_t q, std::size_t s, std::size_t m) {
  require_prime(q);
  if (s == 0 || s > q)
    throw std::invalid_argument("faure net needs 1 <= s <= q (s=" + std::to_string(s) +
                                ", q=" + std::to_string(q) + "); use q=" +
                                std::to_string(next_prime(static_cast<std::uint32_t>(s))));
  return sequence_prefix(faure_sequence(q, s), m, m);
}

DigitalNet sobol_matrices(std::size_t s, std::size_t m, std::size_t n) {
  if (s == 0 || s > sobol_max_dimension())
    throw std::invalid_argument("sobol net supports 1 <= s <= " +
                                std::to_string(sobol_max_dimension()) + ", got s=" +
                                std::to_string(s));
  return sequence_prefix(sobol_sequence(s), m, n == 0 ? m : n);
}

DigitalSequence::DigitalSequence(std::uint32_t q, std::size_t s, RowSupplier supplier,
                                 std::size_t max_rows, std::size_t max_cols)
    : q_(q), s_(s), supplier_(std::move(supplier)), max_rows_(max_rows), max_cols_(max_cols) {
  require_prime(q);
  if (s == 0) throw std::invalid_argument("digital sequence needs s >= 1");
}

DigitRow DigitalSequence::row(std::size_t coord, std::size_t row, std::size_t cols) const {
  if (coord >= s_) throw std::out_of_range("sequence coordinate out of range");
  if (row >= max_rows_ || cols > max_cols_)
    throw std::out_of_range("sequence supplies at most " + shape(max_rows_, max_cols_) +
                            " matrices; requested row " + std::to_string(row + 1) + " with " +
                            std::to_string(cols) + " columns");
  auto r = supplier_(coord, row, cols);
  if (r.size() != cols) throw std::logic_error("row supplier returned a row of the wrong width");
  return r;
}

DigitalNet sequence_prefix(const DigitalSequence& seq, std::size_t m, std::size_t n) {
  std::vector<GenMatrix> mats;
  for (std::size_t j = 0; j < seq.s(); ++j) {
    std::vector<Digit> entries;
    entries.reserve(n * m);
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = seq.row(j, r, m);
      entries.insert(entries.end(), row.begin(), row.end());
    }
    mats.emplace_back(seq.base(), n, m, std::move(entries));
  }
  return DigitalNet(std::move(mats));
}

DigitalSequence identity_sequence(std::uint32_t q, std::size_t s) {
  return DigitalSequence(
      q, s,
      [](std::size_t, std::size_t row, std::size_t cols) {
        DigitRow r(cols, 0);
        if (row < cols) r[row] = 1;
        return r;
      },
      kSequenceDepth, kSequenceDepth);
}

DigitalSequence faure_sequence(std::uint32_t q, std::size_t s) {
  require_prime(q);
  if (s == 0 || s > q)
    throw std::invalid_argument("faure sequence needs 1 <= s <= q (s=" + std::to_string(s) +
                                ", q=" + std::to_string(q) + "); use q=" +
                                std::to_string(next_prime(static_cast<std::uint32_t>(s))));
  return DigitalSequence(
      q, s,
      [q](std::size_t coord, std::size_t row, std::size_t cols) {
        return faure_row(q, coord, row, cols);
      },
      kSequenceDepth, kSequenceDepth);
}

DigitalSequence sobol_sequence(std::size_t s) {
  if (s == 0 || s > sobol_max_dimension())
    throw std::invalid_argument("sobol sequence supports 1 <= s <= " +
                                std::to_string(sobol_max_dimension()) + ", got s=" +
                                std::to_string(s));
  return DigitalSequence(2, s, sobol_row, kSequenceDepth, kSequenceDepth);
}

DigitalNet family_net(const std::string& family, std::uint32_t q, std::size_t m, std::size_t n,
                      std::size_t s) {
  if (n == 0) n = m;
  if (family == "identity") {
    if (s == 0) throw std::invalid_argument("dimension s must be >= 1");
    return DigitalNet(std::vector<GenMatrix>(s, GenMatrix::identity(q, n, m)));
  }
  return sequence_prefix(family_sequence(family, q, s), m, n);
}

DigitalSequence family_sequence(const std::string& family, std::uint32_t q, std::size_t s) {
  if (family == "identity") return identity_sequence(q, s);
  if (family == "faure") return faure_sequence(q, s);
  if (family == "sobol") {
    if (q != 2)
      throw std::invalid_argument("sobol is a base-2 family (got q=" + std::to_string(q) +
                                  "); use q=2 or --family faure");
    return sobol_sequence(s);
  }
  throw std::invalid_argument("unknown family '" + family + "'; expected identity, faure or sobol");
}

std::uint32_t next_prime(std::uint32_t v) {
  if (v <= 2) return 2;
  while (!is_prime(v)) ++v;
  return v;
}

}  // namespace hoqmc
