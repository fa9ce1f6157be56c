#include "hoqmc/qmc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hoqmc/format.hpp"

namespace hoqmc {

namespace {

TestFunction product_function(std::string name, std::size_t s, double (*g)(double),
                              double integral_1d) {
  TestFunction f;
  f.name = std::move(name);
  f.s = s;
  f.evaluate = [g](std::span<const double> x) {
    double v = 1.0;
    for (double xi : x) v *= g(xi);
    return v;
  };
  f.exact_integral = std::pow(integral_1d, static_cast<double>(s));
  return f;
}

double half_minus_x(double x) { return 0.5 - x; }
double x_squared(double x) { return x * x; }
double exp_normalized(double x) { return std::exp(x) / (std::numbers::e - 1.0); }
double sin_scaled(double x) { return std::sin(std::numbers::pi * x) * std::numbers::pi / 2.0; }

void check_shape(const DigitalNet& net, const std::optional<Point>& shift) {
  if (!shift) return;
  if (shift->size() != net.s())
    throw std::invalid_argument("shift has " + std::to_string(shift->size()) +
                                " coordinates, net has " + std::to_string(net.s()));
  for (const auto& c : *shift)
    if (c.size() != net.n() || c.base() != net.base())
      throw std::invalid_argument("shift digit vectors must have the net's base and n digits");
}

double integrate_points(const TestFunction& f, const std::vector<Point>& pts,
                        const std::optional<Point>& shift) {
  std::vector<double> values(pts.size());
  std::vector<double> x(f.s);
  for (std::size_t h = 0; h < pts.size(); ++h) {
    for (std::size_t j = 0; j < f.s; ++j)
      x[j] = coordinate_value(shift ? oplus(pts[h][j], (*shift)[j]) : pts[h][j]);
    values[h] = f.evaluate(x);
  }
  return pairwise_sum(values) / static_cast<double>(pts.size());
}

}  // namespace

std::vector<std::string> builtin_test_function_names() {
  return {"half-minus-x", "x-squared", "exp", "sin"};
}

std::vector<TestFunction> builtin_test_functions(std::size_t s) {
  if (s == 0) throw std::invalid_argument("dimension s must be >= 1");
  return {product_function("half-minus-x", s, half_minus_x, 0.0),
          product_function("x-squared", s, x_squared, 1.0 / 3.0),
          product_function("exp", s, exp_normalized, 1.0),
          product_function("sin", s, sin_scaled, 1.0)};
}

TestFunction builtin_test_function(const std::string& name, std::size_t s) {
  for (auto& f : builtin_test_functions(s))
    if (f.name == name) return f;
  std::string known;
  for (const auto& n : builtin_test_function_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown function '" + name + "'; expected one of " + known);
}

TestFunction walsh_test_function(std::vector<std::uint64_t> kvec, std::uint32_t q, std::size_t n) {
  require_prime(q);
  TestFunction f;
  f.name = "walsh";
  f.s = kvec.size();
  bool zero = true;
  for (auto k : kvec) zero = zero && k == 0;
  f.exact_integral = zero ? 1.0 : 0.0;
  f.evaluate = [kvec, q, n](std::span<const double> x) {
    Point p;
    for (double xi : x) p.push_back(DigitVector::from_fraction(xi, q, n));
    return wal_eval_multi(kvec, p).real();
  };
  f.smoothness_delta = 0;
  return f;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double coordinate_value(const DigitVector& x) {
  const auto depth = std::min<std::size_t>(x.size(), max_exact_digits(x.base()));
  return depth == x.size() ? x.to_fraction() : x.resized(depth).to_fraction();
}

double qmc_integrate(const TestFunction& f, const DigitalNet& net,
                     const std::optional<Point>& shift) {
  if (f.s != net.s())
    throw std::invalid_argument("function '" + f.name + "' has s=" + std::to_string(f.s) +
                                ", net has s=" + std::to_string(net.s()));
  check_shape(net, shift);
  return integrate_points(f, net.points(), shift);
}

std::complex<double> character_sum(const DigitalNet& net, std::span<const std::uint64_t> kvec,
                                   const std::optional<Point>& shift) {
  if (kvec.size() != net.s())
    throw std::invalid_argument("wavenumber has " + std::to_string(kvec.size()) +
                                " coordinates, net has " + std::to_string(net.s()));
  check_shape(net, shift);
  const std::uint32_t q = net.base();
  // Count points per exponent value, then combine the q roots of unity.
  std::vector<std::uint64_t> counts(q, 0);
  for (std::uint64_t h = 0; h < net.num_points(); ++h) {
    Point x = net.point(h);
    if (shift)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = oplus(x[j], (*shift)[j]);
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < x.size(); ++j) e += wal_exponent(kvec[j], x[j]);
    ++counts[e % q];
  }
  std::complex<double> total{0.0, 0.0};
  for (Digit e = 0; e < q; ++e)
    if (counts[e] != 0) total += static_cast<double>(counts[e]) * root_of_unity(e, q);
  return total / static_cast<double>(net.num_points());
}

ShiftRegisterRng::ShiftRegisterRng(std::uint64_t seed) {
  // splitmix64 step; never yields a zero state for xorshift.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  state_ = z == 0 ? 0x9E3779B97F4A7C15ull : z;
}

std::uint64_t ShiftRegisterRng::next_u64() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

Digit ShiftRegisterRng::uniform_digit(std::uint32_t q) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % q;
  while (true) {
    const std::uint64_t v = next_u64();
    if (v < limit) return static_cast<Digit>(v % q);
  }
}

Point random_digital_shift(std::uint32_t q, std::size_t n, std::size_t s, ShiftRegisterRng& rng) {
  require_prime(q);
  Point p;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Digit> d(n);
    for (auto& v : d) v = rng.uniform_digit(q);
    p.emplace_back(q, std::move(d));
  }
  return p;
}

Point random_digital_shift(std::uint32_t q, std::size_t n, std::size_t s, std::uint64_t seed) {
  ShiftRegisterRng rng(seed);
  return random_digital_shift(q, n, s, rng);
}

double fit_log_slope(std::span<const ConvergenceRow> rows, std::uint32_t q) {
  std::vector<std::size_t> ms;
  for (const auto& r : rows) ms.push_back(r.m);
  std::sort(ms.begin(), ms.end());
  const std::size_t cutoff = ms.size() > 2 ? ms[2] : std::numeric_limits<std::size_t>::max();
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : rows) {
    if (r.m < cutoff || !(r.error > 0.0)) continue;
    xs.push_back(static_cast<double>(r.m));
    ys.push_back(std::log(r.error) / std::log(static_cast<double>(q)));
  }
  if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double nx = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= nx;
  my /= nx;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

ConvergenceTable convergence_study(const TestFunction& f, const NetFamily& family,
                                   std::size_t m_min, std::size_t m_max, std::size_t shifts,
                                   std::uint64_t seed) {
  if (m_min == 0 || m_max < m_min)
    throw std::invalid_argument("need 1 <= m_min <= m_max");
  ConvergenceTable table;
  ShiftRegisterRng rng(seed);
  for (std::size_t m = m_min; m <= m_max; ++m) {
    const DigitalNet net = family(m);
    if (net.s() != f.s)
      throw std::invalid_argument("family produced s=" + std::to_string(net.s()) +
                                  " but function '" + f.name + "' has s=" + std::to_string(f.s));
    table.q = net.base();
    const auto pts = net.points();
    double error = 0.0;
    if (shifts == 0) {
      error = std::abs(integrate_points(f, pts, std::nullopt) - f.exact_integral);
    } else {
      std::vector<double> sq(shifts);
      for (std::size_t r = 0; r < shifts; ++r) {
        const Point sigma = random_digital_shift(net.base(), net.n(), net.s(), rng);
        const double e = integrate_points(f, pts, sigma) - f.exact_integral;
        sq[r] = e * e;
      }
      error = std::sqrt(pairwise_sum(sq) / static_cast<double>(shifts));
    }
    table.rows.push_back({m, net.num_points(), error, 0.0});
    table.rows.back().slope_so_far = fit_log_slope(table.rows, table.q);
  }
  table.fitted_slope = table.rows.back().slope_so_far;
  if (std::isnan(table.fitted_slope))
    throw std::domain_error("convergence slope undefined: fewer than two nonzero errors after "
                            "dropping the two smallest m");
  return table;
}

std::string ConvergenceTable::to_csv() const {
  std::ostringstream os;
  os << "m,N,error,slope_so_far\n";
  for (const auto& r : rows)
    os << r.m << ',' << r.N << ',' << format_double(r.error) << ','
       << format_double(r.slope_so_far) << '\n';
  return os.str();
}

}  // namespace hoqmc
