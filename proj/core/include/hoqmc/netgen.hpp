#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hoqmc/gfq.hpp"
#include "hoqmc/linalg.hpp"

namespace hoqmc {

/// An n x m matrix over F_q. Row l (0-based here, 1-based in the docs)
/// produces output digit l+1 of a point coordinate.
class GenMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument unless rows, cols >= 1 and q
  /// is prime.
  GenMatrix(std::uint32_t q, std::size_t rows, std::size_t cols);
  /// Row-major entries; all must be < q.
  GenMatrix(std::uint32_t q, std::size_t rows, std::size_t cols, std::vector<Digit> entries);

  static GenMatrix identity(std::uint32_t q, std::size_t rows, std::size_t cols);

  std::uint32_t base() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Digit operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Digit v);
  std::span<const Digit> row(std::size_t r) const {
    return std::span<const Digit>(entries_).subspan(r * cols_, cols_);
  }
  const std::vector<Digit>& entries() const { return entries_; }

  /// Upper-left rows x cols submatrix.
  GenMatrix top_left(std::size_t rows, std::size_t cols) const;

  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

 private:
  std::uint32_t q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Digit> entries_;
};

/// Largest point set that points() will materialize.
inline constexpr std::uint64_t kPointCap = std::uint64_t{1} << 22;

/// s generating matrices of a common shape n x m over F_q.
class DigitalNet {
 public:
  /// Throws std::invalid_argument on an empty list or mismatched shapes or
  /// bases, and std::out_of_range if q^m does not fit in 64 bits.
  explicit DigitalNet(std::vector<GenMatrix> matrices);

  std::uint32_t base() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t s() const { return matrices_.size(); }
  std::uint64_t num_points() const { return num_points_; }

  const GenMatrix& matrix(std::size_t j) const { return matrices_.at(j); }
  const std::vector<GenMatrix>& matrices() const { return matrices_; }

  /// Point x_h. Throws std::out_of_range if h >= q^m.
  Point point(std::uint64_t h) const;
  /// All q^m points in index order. Throws CapExceeded above kPointCap.
  std::vector<Point> points() const;

  /// Net formed by the listed coordinates (0-based), in the given order.
  DigitalNet project(std::span<const std::size_t> coords) const;
  /// Keep the first rows of every matrix (n' <= n).
  DigitalNet truncate_rows(std::size_t rows) const;

  friend bool operator==(const DigitalNet&, const DigitalNet&) = default;

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::size_t m_;
  std::uint64_t num_points_;
  std::vector<GenMatrix> matrices_;
};

/// Free-function form of DigitalNet::point.
inline Point net_point(const DigitalNet& net, std::uint64_t h) { return net.point(h); }

/// s copies of the m x m identity. s = 1 is the van der Corput net.
DigitalNet identity_net(std::uint32_t q, std::size_t m, std::size_t s);

/// Faure net: C_j is the (j-1)-th power of the upper triangular Pascal
/// matrix mod q. Requires s <= q.
DigitalNet faure_matrices(std::uint32_t q, std::size_t s, std::size_t m);

/// Number of Sobol' dimensions in the embedded direction-number table.
std::size_t sobol_max_dimension();

/// Base-2 Sobol' net with n x m matrices (n defaults to m, n, m <= 64).
DigitalNet sobol_matrices(std::size_t s, std::size_t m, std::size_t n = 0);

/// Direction integers m_1, ..., m_count (m_k odd, m_k < 2^k) of Sobol'
/// dimension dim (1-based).
std::vector<std::uint64_t> sobol_direction_integers(std::size_t dim, std::size_t count);

/// Generating matrices with an unbounded (or large) number of rows and
/// columns. The supplier returns row `row` (0-based) of C_coord truncated
/// to `cols` columns and must be deterministic.
class DigitalSequence {
 public:
  using RowSupplier =
      std::function<DigitRow(std::size_t coord, std::size_t row, std::size_t cols)>;

  /// max_rows / max_cols bound what the supplier can produce.
  DigitalSequence(std::uint32_t q, std::size_t s, RowSupplier supplier, std::size_t max_rows,
                  std::size_t max_cols);

  std::uint32_t base() const { return q_; }
  std::size_t s() const { return s_; }
  std::size_t max_rows() const { return max_rows_; }
  std::size_t max_cols() const { return max_cols_; }

  /// Throws std::out_of_range beyond the supplier range.
  DigitRow row(std::size_t coord, std::size_t row, std::size_t cols) const;

 private:
  std::uint32_t q_;
  std::size_t s_;
  RowSupplier supplier_;
  std::size_t max_rows_;
  std::size_t max_cols_;
};

/// Upper-left n x m truncation of every matrix of the sequence.
DigitalNet sequence_prefix(const DigitalSequence& seq, std::size_t m, std::size_t n);

DigitalSequence identity_sequence(std::uint32_t q, std::size_t s);
DigitalSequence faure_sequence(std::uint32_t q, std::size_t s);
DigitalSequence sobol_sequence(std::size_t s);

/// Built-in families by name: "identity", "faure" or "sobol". n = 0 means
/// n = m. Throws std::invalid_argument with a corrective hint when the
/// family constraints are violated.
DigitalNet family_net(const std::string& family, std::uint32_t q, std::size_t m, std::size_t n,
                      std::size_t s);
DigitalSequence family_sequence(const std::string& family, std::uint32_t q, std::size_t s);

/// Smallest prime >= v.
std::uint32_t next_prime(std::uint32_t v);

}  // namespace hoqmc
