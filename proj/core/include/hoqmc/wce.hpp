#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hoqmc/netgen.hpp"
#include "hoqmc/rational.hpp"
#include "hoqmc/walsh.hpp"

namespace hoqmc {

/// Product weights gamma_u = prod_{j in u} gamma_j. gamma_empty defaults
/// to 1 (the product rule); other values are passed through unchanged.
class WeightModel {
 public:
  /// Throws std::invalid_argument on a negative or non-finite weight.
  explicit WeightModel(std::vector<double> gammas, double gamma_empty = 1.0);
  static WeightModel uniform(std::size_t s, double gamma = 1.0);

  std::size_t s() const { return gammas_.size(); }
  double gamma(std::size_t j) const { return gammas_.at(j); }
  double gamma_empty() const { return gamma_empty_; }
  /// gamma_u for the coordinate set encoded as a bit mask.
  double gamma_u(std::uint64_t mask) const;
  /// e_k(gamma_1, ..., gamma_s) for k = 0..s: the sum of gamma_u over |u| = k.
  std::vector<double> size_sums() const;

 private:
  std::vector<double> gammas_;
  double gamma_empty_;
};

/// Quality parameters a worst-case error bound refers to.
struct NetCertification {
  unsigned t;
  Rational beta;
};

struct ErrorReport {
  double truncated_value = 0.0;
  /// Upper bound on the contribution of dual vectors with a component
  /// >= q^n_t; the true worst-case error lies in
  /// [truncated_value, truncated_value + tail_bound].
  double tail_bound = 0.0;
  /// Closed-form bound for a certified net; NaN when beta > 1.
  double closed_form_bound = 0.0;
  double theta = 0.0;
  unsigned t = 0;
  unsigned alpha = 0;
  Rational beta = Rational::integer(1);
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t s = 0;
  std::uint32_t q = 2;
  std::size_t n_t = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

/// Worst-case error of the equal-weight rule over the net in the weighted
/// Walsh space of smoothness theta:
///   sum_{u nonempty} gamma_u sum_{k_u in D_u*} q^(-mu_theta(k_u)),
/// with every component restricted to [1, q^n_t). One enumeration of the
/// dual net covers all subsets u; k contributes to u = support(k).
///
/// The net is certified as a (t, ceil(theta), beta, n x m, s)-net with
/// beta = min(1, ceil(theta) m / n) and strict t unless `cert` is given.
/// n_t = 0 means n_t = n.
ErrorReport worst_case_error(const DigitalNet& net, const SmoothnessParam& sp,
                             const WeightModel& w, std::size_t n_t = 0,
                             std::optional<NetCertification> cert = std::nullopt);

/// Closed-form upper bound for a digital (t, ceil(theta), beta, n x m, s)
/// net. Non-integer theta:
///   q^(-theta floor((bn - t)/ceil(theta))) sum_u gamma_u C_|u|
///     (bn - t + ceil(theta))^(|u| ceil(theta) - 1),
///   C_v = q^(v ceil(theta)) ((q - q^lambda)^-1
///         + (1 - q^((1 - theta)/ceil(theta)))^(-v ceil(theta))).
/// Integer theta:
///   q^(-(bn - t)) sum_u gamma_u C'_|u| (bn - t + theta)^(|u| theta),
///   C'_v = q^(v theta) (q^-1 + (1 - q^(1/theta - 1))^(-v theta)).
/// bn is floor(beta n). Throws std::invalid_argument if beta > 1 or
/// t > floor(beta n).
double wce_upper_bound(unsigned t, const Rational& beta, std::size_t n,
                       const SmoothnessParam& sp, const WeightModel& w, std::uint32_t q);

/// Error of the zero-point rule: gamma_empty.
double initial_error(const WeightModel& w);

/// Z = sum_{k >= 1} q^(-mu_theta(k)).
double walsh_weight_sum(std::uint32_t q, const SmoothnessParam& sp);

/// sum_{k >= q^n_t} q^(-mu_theta(k)).
double walsh_weight_tail(std::uint32_t q, const SmoothnessParam& sp, std::size_t n_t);

/// sum_{u nonempty} gamma_u |u| T Z^(|u|-1) with T = walsh_weight_tail and
/// Z = walsh_weight_sum: bounds the r-weight of every k_u with all
/// components nonzero and at least one component >= q^n_t, dual or not.
double wce_tail_bound(std::uint32_t q, const SmoothnessParam& sp, const WeightModel& w,
                      std::size_t n_t);

}  // namespace hoqmc
