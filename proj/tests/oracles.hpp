#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the net container and are written for
// clarity, not speed.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "hoqmc/netgen.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::uint32_t>>;

inline std::vector<std::uint32_t> digits_lsf(std::uint64_t k, std::uint32_t q, std::size_t n) {
  std::vector<std::uint32_t> d(n, 0);
  for (std::size_t i = 0; i < n; ++i, k /= q) d[i] = static_cast<std::uint32_t>(k % q);
  return d;
}

inline std::uint64_t ipow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= q;
  return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  for (std::uint32_t x = 1; x < q; ++x)
    if ((static_cast<std::uint64_t>(a) * x) % q == 1) return x;
  return 0;
}

/// Rank by textbook Gaussian elimination on a copy.
inline std::size_t rank(Matrix rows, std::uint32_t q) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const std::uint32_t inv = inv_mod(rows[r][c], q);
    for (auto& v : rows[r]) v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * inv) % q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[i][k] = static_cast<std::uint32_t>(
            (rows[i][k] + static_cast<std::uint64_t>(q - f) * rows[r][k]) % q);
    }
    ++r;
  }
  return r;
}

/// True iff some nontrivial combination of the rows vanishes, by trying all
/// q^r coefficient vectors.
inline bool dependent_by_search(const Matrix& rows, std::uint32_t q) {
  const std::size_t r = rows.size();
  if (r == 0) return false;
  const std::size_t cols = rows[0].size();
  const std::uint64_t total = ipow(q, r);
  for (std::uint64_t c = 1; c < total; ++c) {
    const auto coef = digits_lsf(c, q, r);
    bool zero = true;
    for (std::size_t k = 0; k < cols && zero; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += static_cast<std::uint64_t>(coef[i]) * rows[i][k];
      zero = acc % q == 0;
    }
    if (zero) return true;
  }
  return false;
}

/// Definition check by enumerating every subset of rows of every
/// coordinate (at most m rows per coordinate).
inline bool net_property(const hoqmc::DigitalNet& net, unsigned alpha, long bound) {
  const std::size_t n = net.n(), m = net.m(), s = net.s();
  std::vector<std::uint64_t> mask(s, 0);
  const std::uint64_t per = std::uint64_t{1} << n;
  while (true) {
    long weight = 0;
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) {
      std::size_t cnt = 0;
      unsigned taken = 0;
      for (std::size_t i = n; i-- > 0;)
        if ((mask[j] >> i) & 1u) {
          ++cnt;
          if (taken < alpha) {
            weight += static_cast<long>(i + 1);
            ++taken;
          }
        }
      ok = cnt <= m;
    }
    if (ok && weight <= bound) {
      Matrix rows;
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i)
          if ((mask[j] >> i) & 1u) {
            const auto r = net.matrix(j).row(i);
            rows.emplace_back(r.begin(), r.end());
          }
      if (rank(rows, net.base()) != rows.size()) return false;
    }
    std::size_t j = 0;
    while (j < s && ++mask[j] == per) mask[j++] = 0;
    if (j == s) return true;
  }
}

inline unsigned strict_t(const hoqmc::DigitalNet& net, unsigned alpha, long floor_beta_n) {
  for (long t = 0; t <= floor_beta_n; ++t)
    if (net_property(net, alpha, floor_beta_n - t)) return static_cast<unsigned>(t);
  return static_cast<unsigned>(floor_beta_n);
}

/// Every nonzero kvec in [0, q^n_t)^s with sum_j C_j^T kbar_j = 0, in
/// lexicographic order.
inline std::vector<std::vector<std::uint64_t>> dual_box(const hoqmc::DigitalNet& net,
                                                       std::size_t n_t) {
  const std::uint32_t q = net.base();
  const std::size_t s = net.s();
  const std::uint64_t side = ipow(q, n_t);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> k(s, 0);
  while (true) {
    std::size_t j = s;
    while (j > 0 && ++k[j - 1] == side) k[--j] = 0;
    if (j == 0) break;
    bool in = true;
    for (std::size_t c = 0; c < net.m() && in; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t jj = 0; jj < s; ++jj) {
        const auto d = digits_lsf(k[jj], q, n_t);
        for (std::size_t i = 0; i < net.n(); ++i) acc += static_cast<std::uint64_t>(net.matrix(jj)(i, c)) * d[i];
      }
      in = acc % q == 0;
    }
    if (in) out.push_back(k);
  }
  return out;
}

/// mu_{q,alpha}(k) straight from the base-q expansion.
inline unsigned mu_alpha(std::uint64_t k, std::uint32_t q, unsigned alpha) {
  std::vector<unsigned> pos;
  for (unsigned p = 1; k != 0; k /= q, ++p)
    if (k % q) pos.push_back(p);
  unsigned s = 0;
  for (unsigned i = 0; i < alpha && i < pos.size(); ++i) s += pos[pos.size() - 1 - i];
  return s;
}

/// wal_k(x) for x = X / q^depth given as an integer numerator.
inline std::complex<double> walsh(std::uint64_t k, std::uint64_t numerator, std::uint32_t q,
                                  std::size_t depth) {
  // x_{l+1} is the (l+1)-th most significant digit of the numerator.
  const auto xd = digits_lsf(numerator, q, depth);
  std::uint64_t e = 0;
  for (std::size_t l = 0; k != 0; k /= q, ++l) e += (k % q) * (l < depth ? xd[depth - 1 - l] : 0);
  const double ang = 2.0 * std::numbers::pi * static_cast<double>(e % q) / q;
  return {std::cos(ang), std::sin(ang)};
}

/// Point coordinate value of h under matrix C, via explicit matrix product.
inline std::uint64_t point_numerator(const hoqmc::GenMatrix& c, std::uint64_t h) {
  const std::uint32_t q = c.base();
  const auto hd = digits_lsf(h, q, c.cols());
  std::uint64_t x = 0;
  for (std::size_t r = 0; r < c.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < c.cols(); ++k) acc += static_cast<std::uint64_t>(c(r, k)) * hd[k];
    x = x * q + acc % q;
  }
  return x;
}

}  // namespace oracle
