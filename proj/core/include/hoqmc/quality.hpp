#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hoqmc/netgen.hpp"
#include "hoqmc/rational.hpp"

namespace hoqmc {

enum class QualityMethod { independence, dual, both };

std::string to_string(QualityMethod m);
/// Accepts "independence", "dual" or "both".
QualityMethod parse_quality_method(const std::string& text);

/// Result of certifying a net as a (t, alpha, beta, n x m, s)-net.
struct QualityReport {
  unsigned alpha = 1;
  Rational beta = Rational::integer(1);
  unsigned t = 0;
  bool strict = false;
  /// Minimum of mu_alpha over the enumerated dual net, when enumeration ran.
  /// +inf if no dual vector was found inside the box.
  std::optional<double> min_mu;
  QualityMethod method = QualityMethod::independence;

  /// One line: "alpha=2 beta=1/1 t=1 strict min_mu=8 method=both".
  std::string serialize() const;

  friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

/// Largest dual-net box (number of enumerated vectors, zero included).
inline constexpr std::uint64_t kDualEnumerationCap = std::uint64_t{1} << 24;

/// Definition check: every row selection (at most m rows per coordinate)
/// whose weight, the sum over coordinates of the alpha largest selected row
/// indices, is at most floor(beta n) - t is linearly independent.
///
/// Throws std::invalid_argument unless alpha >= 1, 0 < beta <= alpha m / n
/// and 0 <= t <= floor(beta n).
bool check_net_property(const DigitalNet& net, unsigned alpha, const Rational& beta, unsigned t);

/// Smallest t for which check_net_property holds.
unsigned strict_t(const DigitalNet& net, unsigned alpha, const Rational& beta);

/// Largest beta allowed for a net at this alpha: alpha m / n.
Rational max_beta(const DigitalNet& net, unsigned alpha);

/// Calls visit(k) for every nonzero k in the dual net with all components
/// below q^n_t. Digits above position n are unconstrained. Requires
/// n_t >= n; throws CapExceeded if the kernel has more than
/// kDualEnumerationCap elements. Visit order is deterministic.
void for_each_dual(const DigitalNet& net, std::size_t n_t,
                   const std::function<void(std::span<const std::uint64_t>)>& visit);

/// Number of vectors (zero included) for_each_dual would enumerate.
std::uint64_t dual_box_size(const DigitalNet& net, std::size_t n_t);

/// for_each_dual collected into a lexicographically sorted list.
std::vector<std::vector<std::uint64_t>> enumerate_dual(const DigitalNet& net, std::size_t n_t);

/// Minimum of mu_alpha over the enumerated dual (+inf when empty). Every
/// dual vector outside the box has mu_alpha >= n_t + 1, so the value is the
/// true minimum whenever it is <= n_t + 1.
double min_mu_dual(const DigitalNet& net, unsigned alpha, std::size_t n_t);

/// True iff the dual minimum observed in the n_t box is compatible with
/// min over D of mu_alpha = floor(beta n) - t + 1 for a strict t.
bool duality_consistent(double min_mu_box, const Rational& beta, std::size_t n, unsigned t,
                        std::size_t n_t);

/// Certify by independence search, dual enumeration or both. With both,
/// a duality mismatch throws ConsistencyError. n_t = 0 means n_t = n.
QualityReport certify(const DigitalNet& net, unsigned alpha, const Rational& beta,
                      QualityMethod method, std::size_t n_t = 0);

/// A parameter tuple implied by a base report, re-checked from scratch.
struct DerivedReport {
  std::string rule;  // "i", "ii", "iii", "iv" or "v"
  unsigned alpha;
  Rational beta;
  unsigned t;
  std::size_t n;      // rows of the net the claim refers to
  std::size_t sigma;  // sequences only, 0 for nets
  bool verified;
};

/// Derived claims for a net certified by `base` (t need not be strict).
std::vector<DerivedReport> propagation_suite(const DigitalNet& net, const QualityReport& base);

/// True iff every prefix sigma m x m with t/(beta sigma) < m <= m_max
/// passes check_net_property.
bool check_sequence_property(const DigitalSequence& seq, unsigned alpha, const Rational& beta,
                             std::size_t sigma, unsigned t, std::size_t m_max);

/// Derived claims for a sequence known to be a (t, alpha, beta, sigma, s)
/// sequence up to m_max: rules (i), (ii) and (v) for every sigma' < sigma.
std::vector<DerivedReport> propagation_suite(const DigitalSequence& seq, std::size_t sigma,
                                             std::size_t m_max, const QualityReport& base);

}  // namespace hoqmc
