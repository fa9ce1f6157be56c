#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "hoqmc/error.hpp"
#include "hoqmc/interlace.hpp"
#include "hoqmc/quality.hpp"
#include "hoqmc/walsh.hpp"
#include "oracles.hpp"

using namespace hoqmc;

namespace {

DigitalNet random_net(std::mt19937_64& gen, std::uint32_t q, std::size_t n, std::size_t m,
                      std::size_t s) {
  std::uniform_int_distribution<Digit> dig(0, q - 1);
  std::vector<GenMatrix> mats;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Digit> e(n * m);
    for (auto& v : e) v = dig(gen);
    mats.emplace_back(q, n, m, std::move(e));
  }
  return DigitalNet(std::move(mats));
}

double oracle_min_mu(const DigitalNet& net, unsigned alpha, std::size_t n_t) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& k : oracle::dual_box(net, n_t)) {
    unsigned w = 0;
    for (auto kj : k) w += oracle::mu_alpha(kj, net.base(), alpha);
    best = std::min(best, static_cast<double>(w));
  }
  return best;
}

}  // namespace

TEST_SUITE("quality") {
  TEST_CASE("check_net_property examples") {
    CHECK(check_net_property(identity_net(2, 4, 1), 1, Rational::integer(1), 0));
    const GenMatrix z(2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
    CHECK_FALSE(check_net_property(DigitalNet({z}), 1, Rational::integer(1), 0));
    CHECK(check_net_property(DigitalNet({z}), 1, Rational::integer(1), 1));
    const auto il = interleave_matrices(sobol_matrices(2, 4), 2);
    CHECK(check_net_property(il, 2, Rational::integer(1), 1));
  }

  TEST_CASE("parameter validation") {
    const auto net = identity_net(2, 3, 1);
    CHECK_THROWS_AS(check_net_property(net, 0, Rational::integer(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(check_net_property(net, 1, Rational(3, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(check_net_property(net, 1, Rational::integer(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(check_net_property(net, 1, Rational(0, 1), 0), std::invalid_argument);
  }

  TEST_CASE("strict_t examples") {
    CHECK(strict_t(faure_matrices(3, 2, 3), 1, Rational::integer(1)) == 0);
    CHECK(strict_t(identity_net(2, 3, 2), 1, Rational::integer(1)) == 2);
  }

  TEST_CASE("strict_t agrees with exhaustive subset search") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 120; ++trial) {
      const std::uint32_t q = trial % 3 == 0 ? 3 : 2;
      const std::size_t m = 1 + trial % 4;
      const std::size_t d = 1 + (trial / 4) % 3;
      const std::size_t n = std::min<std::size_t>(d * m, 6);
      const std::size_t s = 1 + (trial / 12) % 2;
      const auto net = random_net(gen, q, n, m, s);
      for (unsigned alpha = 1; alpha <= 3; ++alpha) {
        const Rational beta = min(Rational::integer(1), max_beta(net, alpha));
        const long bn = beta.floor_times(static_cast<std::int64_t>(n));
        CAPTURE(trial);
        CAPTURE(alpha);
        CHECK(strict_t(net, alpha, beta) == oracle::strict_t(net, alpha, bn));
      }
    }
  }

  TEST_CASE("check passes at t = floor(beta n) and is monotone in t") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 40; ++trial) {
      const auto net = random_net(gen, 2, 6, 3, 2);
      for (unsigned alpha = 1; alpha <= 2; ++alpha) {
        const Rational beta = min(Rational::integer(1), max_beta(net, alpha));
        const auto bn = static_cast<unsigned>(beta.floor_times(6));
        CHECK(check_net_property(net, alpha, beta, bn));
        bool passed = false;
        for (unsigned t = 0; t <= bn; ++t) {
          const bool ok = check_net_property(net, alpha, beta, t);
          if (passed) CHECK(ok);
          passed = passed || ok;
        }
      }
    }
  }

  TEST_CASE("dual enumeration matches the box oracle") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint32_t q = trial % 2 ? 3 : 2;
      const std::size_t m = 1 + trial % 3;
      const std::size_t n = m + (trial / 3) % 2;
      const auto net = random_net(gen, q, n, m, 2);
      for (std::size_t n_t : {n, n + 1}) {
        if (oracle::ipow(q, n_t * 2) > (1u << 14)) continue;
        CHECK(enumerate_dual(net, n_t) == oracle::dual_box(net, n_t));
        CHECK(dual_box_size(net, n_t) == oracle::dual_box(net, n_t).size() + 1);
      }
    }
    CHECK(enumerate_dual(identity_net(2, 2, 1), 2).empty());
    CHECK(std::isinf(min_mu_dual(identity_net(2, 2, 1), 1, 2)));
    CHECK_THROWS_AS(enumerate_dual(identity_net(2, 3, 1), 2), std::invalid_argument);
  }

  TEST_CASE("dual vectors have full character sums") {
    const auto net = sobol_matrices(2, 3);
    const auto pts = net.points();
    const auto dual = enumerate_dual(net, 3);
    CHECK_FALSE(dual.empty());
    for (const auto& k : dual) {
      CHECK(std::any_of(k.begin(), k.end(), [](auto v) { return v != 0; }));
      std::complex<double> sum = 0.0;
      for (const auto& p : pts) sum += wal_eval_multi(k, p);
      CHECK(std::abs(sum - static_cast<double>(pts.size())) < 1e-9);
    }
  }

  TEST_CASE("dual is closed under digitwise difference") {
    for (std::uint32_t q : {2u, 3u}) {
      const auto net = faure_matrices(q, 2, 2);
      const auto dual = enumerate_dual(net, 3);
      const std::set<std::vector<std::uint64_t>> in(dual.begin(), dual.end());
      for (const auto& a : dual)
        for (const auto& b : dual) {
          if (a == b) continue;
          std::vector<std::uint64_t> c(a.size());
          for (std::size_t j = 0; j < a.size(); ++j) c[j] = int_ominus(a[j], b[j], q);
          CHECK(in.count(c) == 1);
        }
    }
  }

  TEST_CASE("min mu over the dual and strict t are dual to each other") {
    std::mt19937_64 gen(13);
    int strict_cases = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const std::uint32_t q = trial % 4 == 0 ? 3 : 2;
      const std::size_t m = 1 + trial % 4;
      const std::size_t n = std::min<std::size_t>(m * (1 + (trial / 4) % 2), q == 2 ? 8 : 4);
      const std::size_t s = 1 + (trial / 8) % 2;
      if (oracle::ipow(q, n * s) > (1u << 16)) continue;
      const auto net = random_net(gen, q, n, m, s);
      for (unsigned alpha = 1; alpha <= 2; ++alpha) {
        const Rational beta = min(Rational::integer(1), max_beta(net, alpha));
        const long bn = beta.floor_times(static_cast<std::int64_t>(n));
        const unsigned t = oracle::strict_t(net, alpha, bn);
        const double mm = oracle_min_mu(net, alpha, n);
        CHECK(min_mu_dual(net, alpha, n) == mm);
        CHECK(mm > static_cast<double>(bn - t));
        if (mm <= static_cast<double>(n)) {
          CHECK(mm == static_cast<double>(bn - t + 1));
          ++strict_cases;
        }
        CHECK(duality_consistent(mm, beta, n, t, n));
        CHECK(certify(net, alpha, beta, QualityMethod::both).t == t);
      }
    }
    CHECK(strict_cases > 20);
  }

  TEST_CASE("min mu of the interleaved sobol net") {
    const auto net = interleave_matrices(sobol_matrices(2, 4), 2);
    const unsigned t = strict_t(net, 2, Rational::integer(1));
    CHECK(min_mu_dual(net, 2, net.n()) == static_cast<double>(8 - t + 1));
    CHECK(min_mu_dual(net, 3, net.n()) >= min_mu_dual(net, 2, net.n()));
    CHECK(min_mu_dual(net, 2, net.n()) >= min_mu_dual(net, 1, net.n()));
  }

  TEST_CASE("certify reports") {
    const auto id = identity_net(2, 3, 1);
    const auto r = certify(id, 1, Rational::integer(1), QualityMethod::independence);
    CHECK(r.serialize() == "alpha=1 beta=1/1 t=0 strict min_mu=none method=independence");
    const auto b = certify(id, 1, Rational::integer(1), QualityMethod::both);
    CHECK(b.serialize() == "alpha=1 beta=1/1 t=0 strict min_mu=inf method=both");
    const auto net = interleave_matrices(sobol_matrices(2, 4), 2);
    const auto both = certify(net, 2, Rational::integer(1), QualityMethod::both);
    const auto dual = certify(net, 2, Rational::integer(1), QualityMethod::dual);
    CHECK(both.t == dual.t);
    CHECK(dual.strict);
    CHECK(both.min_mu == dual.min_mu);
    CHECK(parse_quality_method("dual") == QualityMethod::dual);
    CHECK(to_string(QualityMethod::both) == "both");
    CHECK_THROWS_AS(parse_quality_method("guess"), std::invalid_argument);
  }

  TEST_CASE("certify detects an inconsistent floor") {
    // Cutting the box at n_t below the certified weight cannot contradict the
    // independence result, so a mismatch can only come from a broken relation.
    const auto net = interleave_matrices(sobol_matrices(2, 4), 2);
    CHECK_NOTHROW(certify(net, 2, Rational::integer(1), QualityMethod::both, 8));
    CHECK(duality_consistent(5.0, Rational::integer(1), 8, 1, 8) == false);
    CHECK(duality_consistent(8.0, Rational::integer(1), 8, 1, 8));
    CHECK(duality_consistent(12.0, Rational::integer(1), 8, 0, 8));
    CHECK_FALSE(duality_consistent(12.0, Rational::integer(1), 8, 0, 10));
  }

  TEST_CASE("propagation rules on nets") {
    const auto net = interleave_matrices(sobol_matrices(2, 4), 2);
    const auto base = certify(net, 2, Rational::integer(1), QualityMethod::independence);
    const auto derived = propagation_suite(net, base);
    std::set<std::string> rules;
    for (const auto& d : derived) {
      CAPTURE(d.rule);
      CAPTURE(d.alpha);
      CHECK(d.verified);
      rules.insert(d.rule);
    }
    CHECK(rules == std::set<std::string>{"i", "ii", "iii", "iv"});
    bool saw_alpha1 = false;
    for (const auto& d : derived)
      if (d.rule == "ii" && d.alpha == 1) {
        saw_alpha1 = true;
        CHECK(d.beta == Rational(1, 2));
      }
    CHECK(saw_alpha1);

    const auto faure = faure_matrices(3, 3, 3);
    const auto fb = certify(faure, 1, Rational::integer(1), QualityMethod::independence);
    for (const auto& d : propagation_suite(faure, fb)) CHECK(d.verified);
  }

  TEST_CASE("propagation rules on sequences") {
    const auto seq = interleave_sequence(sobol_sequence(2), 2);
    QualityReport base;
    base.alpha = 2;
    base.beta = Rational::integer(1);
    base.t = 1;
    CHECK(check_sequence_property(seq, 2, Rational::integer(1), 2, 1, 5));
    const auto derived = propagation_suite(seq, 2, 5, base);
    std::set<std::string> rules;
    for (const auto& d : derived) {
      CHECK(d.verified);
      rules.insert(d.rule);
    }
    CHECK(rules.count("v") == 1);
  }
}
