#include "hoqmc/wce.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hoqmc/format.hpp"
#include "hoqmc/quality.hpp"

namespace hoqmc {

namespace {

// Compensated (Neumaier) running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct WeightSeries {
  double total;
  double tail;  // part with highest digit position a > n_t
};

// Sums over k >= 1 grouped by the highest digit position a of k:
//   term(a) = (q-1) q^-a G(delta-1, a-1),
// where G(j, A) sums q^-mu over the lower digits (k' < q^A) when j more
// full positions and then one lambda-weighted position are counted:
//   G(0, A) = 1 + sum_{b<=A} (q-1) q^(b-1) q^(-lambda b),
//   G(j, A) = 1 + sum_{b<=A} (q-1) q^-b G(j-1, b-1).
// G(0, A) grows like q^((1-lambda)A), so P(a) = q^-a G(0, a-1) is carried
// instead. The series is cut once a term falls below 1e-20 of the running
// total and the remainder is bounded by a geometric series.
WeightSeries weight_series(std::uint32_t q, const SmoothnessParam& sp, std::size_t n_t) {
  const double qd = q;
  const unsigned delta = sp.delta();
  const double lambda = sp.lambda();
  if (delta == 0) throw std::invalid_argument("weight series needs theta > 1");

  std::vector<double> g(delta, 1.0);  // g[j] = G(j, a-1) for j >= 1
  double p = 1.0 / qd;                // P(1)
  double qa = 1.0 / qd;               // q^-a
  Accumulator total;
  Accumulator tail;
  double prev = 0.0;
  const double limit_ratio = std::pow(qd, -lambda);
  constexpr std::size_t kMaxTerms = 10'000'000;
  for (std::size_t a = 1; a <= kMaxTerms; ++a) {
    const double term = (delta == 1 ? p : qa * g[delta - 1]) * (qd - 1.0);
    total.add(term);
    if (a > n_t) tail.add(term);
    if (a > n_t + 8 && prev > 0.0 && term <= 1e-20 * total.value()) {
      const double r = std::max(term / prev, limit_ratio);
      if (r < 1.0) {
        const double rest = term * r / (1.0 - r);
        total.add(rest);
        tail.add(rest);
        return {total.value(), tail.value()};
      }
    }
    prev = term;
    for (unsigned j = delta - 1; j >= 2; --j) g[j] += (qd - 1.0) * qa * g[j - 1];
    if (delta >= 2) g[1] += (qd - 1.0) * p;
    p = p / qd + (qd - 1.0) * std::pow(qd, -2.0 - lambda * static_cast<double>(a));
    qa /= qd;
  }
  throw std::invalid_argument("r-weight series did not converge; theta too close to an integer "
                              "from above");
}

}  // namespace

WeightModel::WeightModel(std::vector<double> gammas, double gamma_empty)
    : gammas_(std::move(gammas)), gamma_empty_(gamma_empty) {
  for (double g : gammas_)
    if (!(g >= 0.0) || !std::isfinite(g))
      throw std::invalid_argument("weights must be finite and >= 0");
  if (!(gamma_empty >= 0.0) || !std::isfinite(gamma_empty))
    throw std::invalid_argument("gamma_empty must be finite and >= 0");
  if (gammas_.size() > 64) throw std::invalid_argument("at most 64 coordinates are supported");
}

WeightModel WeightModel::uniform(std::size_t s, double gamma) {
  return WeightModel(std::vector<double>(s, gamma));
}

double WeightModel::gamma_u(std::uint64_t mask) const {
  double g = 1.0;
  for (std::size_t j = 0; j < gammas_.size(); ++j)
    if ((mask >> j) & 1u) g *= gammas_[j];
  return mask == 0 ? gamma_empty_ : g;
}

std::vector<double> WeightModel::size_sums() const {
  std::vector<double> e(gammas_.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 0; j < gammas_.size(); ++j)
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += gammas_[j] * e[k - 1];
  return e;
}

double initial_error(const WeightModel& w) { return w.gamma_empty(); }

double walsh_weight_sum(std::uint32_t q, const SmoothnessParam& sp) {
  return weight_series(q, sp, 0).total;
}

double walsh_weight_tail(std::uint32_t q, const SmoothnessParam& sp, std::size_t n_t) {
  return weight_series(q, sp, n_t).tail;
}

double wce_tail_bound(std::uint32_t q, const SmoothnessParam& sp, const WeightModel& w,
                      std::size_t n_t) {
  const auto series = weight_series(q, sp, n_t);
  const auto e = w.size_sums();
  Accumulator acc;
  for (std::size_t v = 1; v < e.size(); ++v)
    acc.add(e[v] * static_cast<double>(v) * series.tail *
            std::pow(series.total, static_cast<double>(v - 1)));
  return acc.value();
}

double wce_upper_bound(unsigned t, const Rational& beta, std::size_t n,
                       const SmoothnessParam& sp, const WeightModel& w, std::uint32_t q) {
  if (beta.num() <= 0 || Rational::integer(1) < beta)
    throw std::invalid_argument("the closed-form bound needs 0 < beta <= 1, got beta=" +
                                beta.to_string());
  const auto bn = beta.floor_times(static_cast<std::int64_t>(n));
  if (static_cast<std::int64_t>(t) > bn)
    throw std::invalid_argument("t exceeds floor(beta n)");
  const double qd = q;
  const double gap = static_cast<double>(bn - t);
  const double theta = sp.theta();
  const auto e = w.size_sums();
  Accumulator acc;
  if (sp.is_integer()) {
    for (std::size_t v = 1; v < e.size(); ++v) {
      const double vt = static_cast<double>(v) * theta;
      const double c = std::pow(qd, vt) * (1.0 / qd + std::pow(1.0 - std::pow(qd, 1.0 / theta - 1.0), -vt));
      acc.add(e[v] * c * std::pow(gap + theta, vt));
    }
    return std::pow(qd, -gap) * acc.value();
  }
  const double ct = sp.ceil_theta();
  for (std::size_t v = 1; v < e.size(); ++v) {
    const double vc = static_cast<double>(v) * ct;
    const double c = std::pow(qd, vc) * (1.0 / (qd - std::pow(qd, sp.lambda())) +
                                         std::pow(1.0 - std::pow(qd, (1.0 - theta) / ct), -vc));
    acc.add(e[v] * c * std::pow(gap + ct, vc - 1.0));
  }
  return std::pow(qd, -theta * std::floor(gap / ct)) * acc.value();
}

ErrorReport worst_case_error(const DigitalNet& net, const SmoothnessParam& sp,
                             const WeightModel& w, std::size_t n_t,
                             std::optional<NetCertification> cert) {
  if (w.s() != net.s())
    throw std::invalid_argument("weight model has " + std::to_string(w.s()) +
                                " coordinates, net has " + std::to_string(net.s()));
  if (n_t == 0) n_t = net.n();
  ErrorReport rep;
  rep.theta = sp.theta();
  rep.alpha = sp.ceil_theta();
  rep.n = net.n();
  rep.m = net.m();
  rep.s = net.s();
  rep.q = net.base();
  rep.n_t = n_t;

  const std::uint32_t q = net.base();
  std::map<std::uint64_t, Accumulator> per_subset;
  for_each_dual(net, n_t, [&](std::span<const std::uint64_t> k) {
    std::uint64_t mask = 0;
    double mu_total = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) {
        mask |= std::uint64_t{1} << j;
        mu_total += mu(k[j], q, sp);
      }
    per_subset[mask].add(std::pow(static_cast<double>(q), -mu_total));
  });
  Accumulator total;
  for (const auto& [mask, acc] : per_subset) total.add(w.gamma_u(mask) * acc.value());
  rep.truncated_value = total.value();
  rep.tail_bound = wce_tail_bound(q, sp, w, n_t);

  if (!cert) {
    const Rational beta = min(Rational::integer(1), max_beta(net, rep.alpha));
    cert = NetCertification{strict_t(net, rep.alpha, beta), beta};
  }
  rep.t = cert->t;
  rep.beta = cert->beta;
  rep.closed_form_bound = Rational::integer(1) < cert->beta
                              ? std::numeric_limits<double>::quiet_NaN()
                              : wce_upper_bound(cert->t, cert->beta, net.n(), sp, w, q);
  return rep;
}

std::string ErrorReport::csv_header() { return "s,m,n,q,theta,t,beta,truncated,tail,upper_bound"; }

std::string ErrorReport::csv_row() const {
  std::ostringstream os;
  os << s << ',' << m << ',' << n << ',' << q << ',' << format_double(theta) << ',' << t << ','
     << beta.to_string() << ',' << format_double(truncated_value) << ','
     << format_double(tail_bound) << ',' << format_double(closed_form_bound);
  return os.str();
}

}  // namespace hoqmc
