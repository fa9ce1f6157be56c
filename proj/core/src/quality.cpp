#include "hoqmc/quality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hoqmc/error.hpp"
#include "hoqmc/linalg.hpp"
#include "hoqmc/walsh.hpp"

namespace hoqmc {

std::string to_string(QualityMethod m) {
  switch (m) {
    case QualityMethod::independence:
      return "independence";
    case QualityMethod::dual:
      return "dual";
    case QualityMethod::both:
      return "both";
  }
  return "unknown";
}

QualityMethod parse_quality_method(const std::string& text) {
  if (text == "independence") return QualityMethod::independence;
  if (text == "dual") return QualityMethod::dual;
  if (text == "both") return QualityMethod::both;
  throw std::invalid_argument("unknown mode '" + text + "'; expected independence, dual or both");
}

std::string QualityReport::serialize() const {
  std::ostringstream os;
  os << "alpha=" << alpha << " beta=" << beta.to_string() << " t=" << t << ' '
     << (strict ? "strict" : "bound") << " min_mu=";
  if (!min_mu)
    os << "none";
  else if (std::isinf(*min_mu))
    os << "inf";
  else
    os << static_cast<long long>(*min_mu);
  os << " method=" << to_string(method);
  return os.str();
}

Rational max_beta(const DigitalNet& net, unsigned alpha) {
  return Rational(static_cast<std::int64_t>(alpha) * static_cast<std::int64_t>(net.m()),
                  static_cast<std::int64_t>(net.n()));
}

namespace {

struct Selection {
  unsigned weight;
  std::vector<std::size_t> rows;  // 0-based
};

void add_subsets(const std::vector<std::size_t>& top, std::size_t lower, std::size_t pick,
                 unsigned weight, std::vector<Selection>& out) {
  // All pick-subsets of {0, ..., lower-1} appended to top.
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    Selection sel{weight, top};
    sel.rows.insert(sel.rows.end(), idx.begin(), idx.end());
    out.push_back(std::move(sel));
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == lower - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < pick; ++k) idx[k] = idx[k - 1] + 1;
  }
}

// Maximal row selections of one coordinate with weight <= bound. Any
// admissible selection is a subset of one of these.
void top_sets(std::size_t n, std::size_t m, unsigned alpha, unsigned bound,
              std::vector<std::size_t>& top, unsigned weight, std::vector<Selection>& out) {
  const std::size_t r = top.size();
  if (r > 0) {
    const std::size_t lowest = top.back();  // 0-based index of i_r
    if (r < alpha) {
      out.push_back({weight, top});
    } else {
      if (r + lowest <= m) {
        Selection sel{weight, top};
        for (std::size_t i = 0; i < lowest; ++i) sel.rows.push_back(i);
        out.push_back(std::move(sel));
      } else {
        add_subsets(top, lowest, m - r, weight, out);
      }
      return;
    }
    if (r == m) return;
  }
  const std::size_t limit = r == 0 ? n : top.back();
  for (std::size_t i = limit; i-- > 0;) {
    const unsigned w = weight + static_cast<unsigned>(i + 1);
    if (w > bound) continue;
    top.push_back(i);
    top_sets(n, m, alpha, bound, top, w, out);
    top.pop_back();
  }
}

bool all_independent(const DigitalNet& net, const std::vector<std::vector<Selection>>& cands,
                     std::size_t j, unsigned budget, const EchelonBasis& basis) {
  if (j == cands.size()) return true;
  for (const auto& sel : cands[j]) {
    if (sel.weight > budget) break;
    if (sel.rows.empty()) {
      if (!all_independent(net, cands, j + 1, budget, basis)) return false;
      continue;
    }
    EchelonBasis b = basis;
    for (auto r : sel.rows)
      if (!b.insert(net.matrix(j).row(r))) return false;
    if (!all_independent(net, cands, j + 1, budget - sel.weight, b)) return false;
  }
  return true;
}

void validate(const DigitalNet& net, unsigned alpha, const Rational& beta) {
  if (alpha == 0) throw std::invalid_argument("alpha must be >= 1");
  if (beta.num() <= 0) throw std::invalid_argument("beta must be > 0");
  if (max_beta(net, alpha) < beta)
    throw std::invalid_argument("beta=" + beta.to_string() + " exceeds alpha m / n = " +
                                max_beta(net, alpha).to_string());
}

}  // namespace

bool check_net_property(const DigitalNet& net, unsigned alpha, const Rational& beta, unsigned t) {
  validate(net, alpha, beta);
  const auto bn = beta.floor_times(static_cast<std::int64_t>(net.n()));
  if (static_cast<std::int64_t>(t) > bn)
    throw std::invalid_argument("t=" + std::to_string(t) + " exceeds floor(beta n) = " +
                                std::to_string(bn));
  const auto bound = static_cast<unsigned>(bn - t);

  std::vector<Selection> sets;
  std::vector<std::size_t> top;
  sets.push_back({0, {}});
  top_sets(net.n(), net.m(), alpha, bound, top, 0, sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const Selection& a, const Selection& b) { return a.weight < b.weight; });
  const std::vector<std::vector<Selection>> cands(net.s(), sets);
  return all_independent(net, cands, 0, bound, EchelonBasis(net.base(), net.m()));
}

unsigned strict_t(const DigitalNet& net, unsigned alpha, const Rational& beta) {
  validate(net, alpha, beta);
  const auto bn = static_cast<unsigned>(beta.floor_times(static_cast<std::int64_t>(net.n())));
  for (unsigned t = 0; t < bn; ++t)
    if (check_net_property(net, alpha, beta, t)) return t;
  return bn;
}

namespace {

struct DualSetup {
  std::vector<DigitRow> basis;
  std::uint64_t size;
};

DualSetup dual_setup(const DigitalNet& net, std::size_t n_t) {
  if (n_t < net.n())
    throw std::invalid_argument("dual box digits n_t=" + std::to_string(n_t) +
                                " must be >= n=" + std::to_string(net.n()));
  if (checked_pow(net.base(), static_cast<unsigned>(n_t)) == 0 || n_t > 64)
    throw std::out_of_range("q^n_t does not fit in 64 bits");
  const std::size_t cols = net.s() * n_t;
  std::vector<DigitRow> a(net.m(), DigitRow(cols, 0));
  for (std::size_t j = 0; j < net.s(); ++j)
    for (std::size_t i = 0; i < net.n(); ++i)
      for (std::size_t c = 0; c < net.m(); ++c) a[c][j * n_t + i] = net.matrix(j)(i, c);
  DualSetup setup{kernel_basis(a, cols, net.base()), 0};
  const std::uint64_t size = checked_pow(net.base(), static_cast<unsigned>(setup.basis.size()));
  if (size == 0 || size > kDualEnumerationCap)
    throw CapExceeded("dual box holds q^" + std::to_string(setup.basis.size()) +
                      " vectors, above the cap 2^24; lower n_t or use independence mode");
  setup.size = size;
  return setup;
}

}  // namespace

std::uint64_t dual_box_size(const DigitalNet& net, std::size_t n_t) {
  return dual_setup(net, n_t).size;
}

void for_each_dual(const DigitalNet& net, std::size_t n_t,
                   const std::function<void(std::span<const std::uint64_t>)>& visit) {
  const auto setup = dual_setup(net, n_t);
  const std::uint32_t q = net.base();
  const std::size_t s = net.s();
  const std::size_t dim = setup.basis.size();
  if (dim == 0) return;
  std::vector<std::uint64_t> k(s, 0);
  std::vector<Digit> coef(dim, 0);

  if (q == 2) {
    std::vector<std::vector<std::uint64_t>> masks(dim, std::vector<std::uint64_t>(s, 0));
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n_t; ++i)
          if (setup.basis[b][j * n_t + i]) masks[b][j] |= std::uint64_t{1} << i;
    // Gray-code walk: each step flips one basis vector.
    for (std::uint64_t g = 1; g < setup.size; ++g) {
      const auto b = static_cast<std::size_t>(std::countr_zero(g));
      for (std::size_t j = 0; j < s; ++j) k[j] ^= masks[b][j];
      visit(k);
    }
    return;
  }

  DigitRow v(s * n_t, 0);
  const std::uint64_t total = setup.size;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t p = 0;
    while (true) {
      const auto& bv = setup.basis[p];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = digit_add(v[c], bv[c], q);
      if (++coef[p] < q) break;
      coef[p] = 0;
      ++p;
    }
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t val = 0;
      for (std::size_t i = n_t; i-- > 0;) val = val * q + v[j * n_t + i];
      k[j] = val;
    }
    visit(k);
  }
}

std::vector<std::vector<std::uint64_t>> enumerate_dual(const DigitalNet& net, std::size_t n_t) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_dual(net, n_t, [&](std::span<const std::uint64_t> k) {
    out.emplace_back(k.begin(), k.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

double min_mu_dual(const DigitalNet& net, unsigned alpha, std::size_t n_t) {
  if (alpha == 0) throw std::invalid_argument("alpha must be >= 1");
  unsigned best = std::numeric_limits<unsigned>::max();
  for_each_dual(net, n_t, [&](std::span<const std::uint64_t> k) {
    best = std::min(best, mu_alpha_vec(k, net.base(), alpha));
  });
  if (best == std::numeric_limits<unsigned>::max()) return std::numeric_limits<double>::infinity();
  return best;
}

bool duality_consistent(double min_mu_box, const Rational& beta, std::size_t n, unsigned t,
                        std::size_t n_t) {
  const double expected =
      static_cast<double>(beta.floor_times(static_cast<std::int64_t>(n))) - t + 1;
  const double floor_out = static_cast<double>(n_t) + 1;
  if (min_mu_box < floor_out) return min_mu_box == expected;
  return floor_out <= expected && expected <= min_mu_box;
}

QualityReport certify(const DigitalNet& net, unsigned alpha, const Rational& beta,
                      QualityMethod method, std::size_t n_t) {
  validate(net, alpha, beta);
  if (n_t == 0) n_t = net.n();
  QualityReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.method = method;
  const auto bn = beta.floor_times(static_cast<std::int64_t>(net.n()));

  if (method != QualityMethod::dual) {
    rep.t = strict_t(net, alpha, beta);
    rep.strict = true;
  }
  if (method == QualityMethod::independence) return rep;

  const double mm = min_mu_dual(net, alpha, n_t);
  rep.min_mu = mm;
  if (method == QualityMethod::dual) {
    const double floor_out = static_cast<double>(n_t) + 1;
    if (mm <= floor_out) {
      rep.t = static_cast<unsigned>(std::max<double>(0.0, static_cast<double>(bn) + 1 - mm));
      rep.strict = true;
    } else {
      // The true minimum lies in [n_t + 1, mm]; only an upper bound on t.
      rep.t = static_cast<unsigned>(std::max<std::int64_t>(0, bn - static_cast<std::int64_t>(n_t)));
      rep.strict = rep.t == 0;
    }
    return rep;
  }
  if (!duality_consistent(mm, beta, net.n(), rep.t, n_t)) {
    std::ostringstream os;
    os << "duality mismatch: independence search gives strict t=" << rep.t
       << " so min mu_alpha over the dual should be " << (bn - rep.t + 1)
       << ", but enumeration with n_t=" << n_t << " found " << mm;
    throw ConsistencyError(os.str());
  }
  return rep;
}

namespace {

unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

bool claim_valid(const DigitalNet& net, unsigned alpha, const Rational& beta, unsigned t) {
  if (alpha == 0 || beta.num() <= 0 || max_beta(net, alpha) < beta) return false;
  return static_cast<std::int64_t>(t) <= beta.floor_times(static_cast<std::int64_t>(net.n()));
}

}  // namespace

std::vector<DerivedReport> propagation_suite(const DigitalNet& net, const QualityReport& base) {
  std::vector<DerivedReport> out;
  const unsigned a = base.alpha;
  auto add = [&](const std::string& rule, const DigitalNet& target, unsigned alpha,
                 const Rational& beta, unsigned t) {
    if (!claim_valid(target, alpha, beta, t)) return;
    out.push_back({rule, alpha, beta, t, target.n(), 0,
                   check_net_property(target, alpha, beta, t)});
  };

  add("i", net, a, base.beta, base.t + 1);
  add("i", net, a, base.beta * Rational(1, 2), base.t);
  for (unsigned ap = 1; ap <= a + 1 && ap <= net.n(); ++ap) {
    const unsigned mn = std::min(a, ap);
    add("ii", net, ap, base.beta * Rational(mn, a), ceil_div(base.t * mn, a));
  }
  if (base.beta == max_beta(net, a))
    for (unsigned ap = 1; ap < a; ++ap) add("iii", net, ap, max_beta(net, ap), ceil_div(base.t * ap, a));
  for (std::size_t np = 1; np < net.n(); ++np)
    add("iv", net.truncate_rows(np), a, base.beta, base.t);
  return out;
}

bool check_sequence_property(const DigitalSequence& seq, unsigned alpha, const Rational& beta,
                             std::size_t sigma, unsigned t, std::size_t m_max) {
  if (sigma == 0) throw std::invalid_argument("sigma must be >= 1");
  if (Rational(alpha, static_cast<std::int64_t>(sigma)) < beta)
    throw std::invalid_argument("beta must be <= alpha / sigma");
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto bsm = beta.num() * static_cast<std::int64_t>(sigma * m);
    if (bsm <= static_cast<std::int64_t>(t) * beta.den()) continue;
    if (!check_net_property(sequence_prefix(seq, m, sigma * m), alpha, beta, t)) return false;
  }
  return true;
}

std::vector<DerivedReport> propagation_suite(const DigitalSequence& seq, std::size_t sigma,
                                             std::size_t m_max, const QualityReport& base) {
  std::vector<DerivedReport> out;
  const unsigned a = base.alpha;
  auto add = [&](const std::string& rule, unsigned alpha, const Rational& beta, unsigned t,
                 std::size_t sg) {
    if (Rational(alpha, static_cast<std::int64_t>(sg)) < beta) return;
    out.push_back({rule, alpha, beta, t, 0, sg,
                   check_sequence_property(seq, alpha, beta, sg, t, m_max)});
  };
  add("i", a, base.beta, base.t + 1, sigma);
  for (unsigned ap = 1; ap <= a + 1; ++ap) {
    const unsigned mn = std::min(a, ap);
    add("ii", ap, base.beta * Rational(mn, a), ceil_div(base.t * mn, a), sigma);
  }
  for (std::size_t sp = 1; sp < sigma; ++sp) add("v", a, base.beta, base.t, sp);
  return out;
}

}  // namespace hoqmc
