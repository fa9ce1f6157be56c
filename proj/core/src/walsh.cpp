#include "hoqmc/walsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hoqmc/error.hpp"

namespace hoqmc {

WaveNumber decompose(std::uint64_t k, std::uint32_t q) {
  require_prime(q);
  WaveNumber w;
  w.k = k;
  w.q = q;
  unsigned pos = 1;
  for (std::uint64_t r = k; r != 0; r /= q, ++pos) {
    const auto d = static_cast<Digit>(r % q);
    if (d != 0) w.terms.push_back({d, pos});
  }
  std::reverse(w.terms.begin(), w.terms.end());
  return w;
}

unsigned highest_position(std::uint64_t k, std::uint32_t q) {
  unsigned a = 0;
  for (; k != 0; k /= q) ++a;
  return a;
}

SmoothnessParam SmoothnessParam::from_theta(double theta) {
  if (!(theta > 1.0) || !std::isfinite(theta))
    throw std::invalid_argument("smoothness theta must be a finite real > 1");
  const double fl = std::floor(theta);
  if (fl == theta) return SmoothnessParam(theta, static_cast<unsigned>(theta) - 1, 1.0);
  return SmoothnessParam(theta, static_cast<unsigned>(fl), theta - fl);
}

SmoothnessParam SmoothnessParam::integer_order(unsigned alpha) {
  if (alpha == 0) throw std::invalid_argument("integer order must be >= 1");
  return SmoothnessParam(alpha, alpha - 1, 1.0);
}

double mu(std::uint64_t k, std::uint32_t q, const SmoothnessParam& sp) {
  if (k == 0) return 0.0;
  // Walk digits from least significant and keep the delta+1 highest positions.
  std::vector<unsigned> pos;
  unsigned p = 1;
  for (std::uint64_t r = k; r != 0; r /= q, ++p)
    if (r % q != 0) pos.push_back(p);
  const std::size_t v = pos.size();
  double total = 0.0;
  const std::size_t full = std::min<std::size_t>(v, sp.delta());
  for (std::size_t i = 0; i < full; ++i) total += pos[v - 1 - i];
  if (v > sp.delta()) total += sp.lambda() * pos[v - 1 - sp.delta()];
  return total;
}

double mu_vec(std::span<const std::uint64_t> kvec, std::uint32_t q, const SmoothnessParam& sp) {
  double total = 0.0;
  for (auto k : kvec) total += mu(k, q, sp);
  return total;
}

double r_weight(std::span<const std::uint64_t> kvec, std::uint32_t q, const SmoothnessParam& sp) {
  return std::pow(static_cast<double>(q), -mu_vec(kvec, q, sp));
}

unsigned mu_alpha(std::uint64_t k, std::uint32_t q, unsigned alpha) {
  std::array<unsigned, 64> pos{};
  std::size_t v = 0;
  unsigned p = 1;
  if (q == 2) {
    for (std::uint64_t r = k; r != 0; r >>= 1, ++p)
      if (r & 1u) pos[v++] = p;
  } else {
    for (std::uint64_t r = k; r != 0; r /= q, ++p)
      if (r % q != 0) pos[v++] = p;
  }
  unsigned total = 0;
  for (std::size_t i = 0; i < v && i < alpha; ++i) total += pos[v - 1 - i];
  return total;
}

unsigned mu_alpha_vec(std::span<const std::uint64_t> kvec, std::uint32_t q, unsigned alpha) {
  unsigned total = 0;
  for (auto k : kvec) total += mu_alpha(k, q, alpha);
  return total;
}

Digit wal_exponent(std::uint64_t k, const DigitVector& x) {
  const std::uint32_t q = x.base();
  std::uint64_t e = 0;
  std::size_t l = 0;
  for (std::uint64_t r = k; r != 0; r /= q, ++l) {
    const auto kappa = r % q;
    if (kappa == 0) continue;
    if (l >= x.size())
      throw std::invalid_argument("wal_eval: point has " + std::to_string(x.size()) +
                                  " digits but wavenumber " + std::to_string(k) + " needs " +
                                  std::to_string(highest_position(k, q)));
    e = (e + kappa * x[l]) % q;
  }
  return static_cast<Digit>(e);
}

std::complex<double> root_of_unity(Digit e, std::uint32_t q) {
  if (e == 0) return {1.0, 0.0};
  if (q == 2) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(q);
  return std::polar(1.0, angle);
}

std::complex<double> wal_eval(std::uint64_t k, const DigitVector& x) {
  return root_of_unity(wal_exponent(k, x), x.base());
}

std::complex<double> wal_eval_multi(std::span<const std::uint64_t> kvec, const Point& x) {
  if (kvec.size() != x.size())
    throw std::invalid_argument("wal_eval_multi: wavenumber has " + std::to_string(kvec.size()) +
                                " coordinates, point has " + std::to_string(x.size()));
  if (x.empty()) return {1.0, 0.0};
  const std::uint32_t q = x.front().base();
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < x.size(); ++j) e += wal_exponent(kvec[j], x[j]);
  return root_of_unity(static_cast<Digit>(e % q), q);
}

namespace {

constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
    -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
    0.3626837833783619829651504, 0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

constexpr std::uint64_t kCellCap = std::uint64_t{1} << 22;

}  // namespace

std::complex<double> walsh_coefficient(const RealFunction& f, std::span<const std::uint64_t> kvec,
                                       std::uint32_t q, unsigned resolution) {
  require_prime(q);
  const std::size_t s = kvec.size();
  if (s == 0) throw std::invalid_argument("walsh_coefficient: empty wavenumber");
  for (auto k : kvec)
    if (resolution <= highest_position(k, q))
      throw std::invalid_argument("walsh_coefficient: resolution M=" + std::to_string(resolution) +
                                  " must exceed the highest digit position " +
                                  std::to_string(highest_position(k, q)) + " of k=" +
                                  std::to_string(k));
  const std::uint64_t per_dim = checked_pow(q, resolution);
  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < s; ++j) {
    if (per_dim == 0 || cells > kCellCap / per_dim)
      throw CapExceeded("walsh_coefficient: q^(M s) cells exceed 2^22; lower the resolution");
    cells *= per_dim;
  }

  // Exponent of wal_{k_j} on each one-dimensional cell.
  std::vector<std::vector<Digit>> expo(s, std::vector<Digit>(per_dim));
  for (std::size_t j = 0; j < s; ++j)
    for (std::uint64_t c = 0; c < per_dim; ++c) {
      // Cell c has left corner c / q^M; its digits most significant first.
      std::vector<Digit> d(resolution);
      std::uint64_t r = c;
      for (unsigned i = resolution; i-- > 0; r /= q) d[i] = static_cast<Digit>(r % q);
      expo[j][c] = wal_exponent(kvec[j], DigitVector(q, std::move(d)));
    }

  const double h = 1.0 / static_cast<double>(per_dim);
  const std::size_t nodes_total = [&] {
    std::size_t n = 1;
    for (std::size_t j = 0; j < s; ++j) n *= kGaussNodes.size();
    return n;
  }();

  std::vector<std::uint64_t> cell(s, 0);
  std::vector<std::size_t> node(s, 0);
  std::vector<double> x(s);
  std::complex<double> total{0.0, 0.0};
  for (std::uint64_t ci = 0; ci < cells; ++ci) {
    double integral = 0.0;
    for (std::size_t ni = 0; ni < nodes_total; ++ni) {
      std::size_t rem = ni;
      double w = 1.0;
      for (std::size_t j = 0; j < s; ++j) {
        const std::size_t g = rem % kGaussNodes.size();
        rem /= kGaussNodes.size();
        x[j] = (static_cast<double>(cell[j]) + 0.5 * (kGaussNodes[g] + 1.0)) * h;
        w *= 0.5 * kGaussWeights[g];
      }
      integral += w * f(x);
    }
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < s; ++j) e += expo[j][cell[j]];
    total += integral * std::conj(root_of_unity(static_cast<Digit>(e % q), q));

    for (std::size_t j = 0; j < s; ++j) {
      if (++cell[j] < per_dim) break;
      cell[j] = 0;
    }
  }
  double volume = 1.0;
  for (std::size_t j = 0; j < s; ++j) volume *= h;
  return total * volume;
}

std::complex<double> j_function_direct(std::uint64_t k, const DigitVector& x) {
  const std::uint32_t q = x.base();
  if (k == 0) return {x.to_fraction(), 0.0};
  const unsigned a1 = highest_position(k, q);
  const DigitVector y = x.size() < a1 ? x.resized(a1) : x;
  // [0, x) splits into cells [0.y_1...y_{i-1} r, + q^-i) for r < y_i. Cells
  // with i < a_1 integrate wal_k to zero; for i > a_1 wal_k equals its value
  // at x itself.
  std::vector<Digit> prefix(y.digits().begin(), y.digits().begin() + a1);
  std::complex<double> total{0.0, 0.0};
  const double cell_a1 = std::pow(static_cast<double>(q), -static_cast<double>(a1));
  for (Digit r = 0; r < y[a1 - 1]; ++r) {
    prefix[a1 - 1] = r;
    total += cell_a1 * std::conj(wal_eval(k, DigitVector(q, prefix)));
  }
  double below = 0.0;
  double scale = cell_a1;
  for (std::size_t i = a1; i < y.size(); ++i) {
    scale /= q;
    below += scale * y[i];
  }
  total += below * std::conj(wal_eval(k, y));
  return total;
}

JSeriesValue j_function_series(std::uint64_t k, const DigitVector& x, unsigned tail_terms) {
  if (tail_terms == 0) throw std::invalid_argument("j_function_series: tail_terms must be >= 1");
  const std::uint32_t q = x.base();
  const double qd = q;
  const unsigned a = highest_position(k, q);
  const DigitVector y = x.resized(std::max<std::size_t>(x.size(), a + tail_terms + 1));

  std::vector<std::complex<double>> upsilon(q);
  double upsilon_sum = 0.0;
  for (Digit kappa = 1; kappa < q; ++kappa) {
    upsilon[kappa] = qd / (root_of_unity(kappa, q) - 1.0);
    upsilon_sum += std::abs(upsilon[kappa]);
  }

  const Digit base_exp = wal_exponent(k, y);
  const std::complex<double> conj_wal_k = std::conj(root_of_unity(base_exp, q));
  std::complex<double> sum = 0.5 * conj_wal_k;

  if (k != 0) {
    const std::uint64_t top = checked_pow(q, a - 1);
    const auto l = static_cast<Digit>(k / top);
    const std::uint64_t k_rest = k % top;
    const std::complex<double> conj_l = std::conj(root_of_unity(l, q));
    const std::complex<double> c0 = 1.0 / (1.0 - conj_l);
    const std::complex<double> cl = 1.0 / (conj_l - 1.0);
    sum += c0 * std::conj(wal_eval(k_rest, y));
    sum += cl * conj_wal_k;
  }

  // wal_{kappa q^(a+c-1) + k}(x) adds kappa * x_{a+c} to the exponent of wal_k.
  double scale = 1.0;
  for (unsigned c = 1; c <= tail_terms; ++c) {
    scale /= qd;
    const Digit xd = y[a + c - 1];
    for (Digit kappa = 1; kappa < q; ++kappa) {
      const Digit e = digit_add(base_exp, digit_mul(kappa, xd, q), q);
      sum += (scale / qd) * upsilon[kappa] * std::conj(root_of_unity(e, q));
    }
  }

  const double qa = std::pow(qd, -static_cast<double>(a));
  const double bound = qa * std::pow(qd, -static_cast<double>(tail_terms)) / (qd - 1.0) * upsilon_sum;
  return {qa * sum, bound};
}

}  // namespace hoqmc
