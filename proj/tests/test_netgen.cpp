#include <doctest.h>

#include <algorithm>
#include <set>

#include "hoqmc/netgen.hpp"
#include "hoqmc/quality.hpp"
#include "hoqmc/walsh.hpp"
#include "oracles.hpp"

using namespace hoqmc;

TEST_SUITE("netgen") {
  TEST_CASE("net_point on identity matrices") {
    const auto net = identity_net(2, 3, 1);
    CHECK(net.point(0)[0].to_fraction() == 0.0);
    CHECK(net.point(1)[0].to_fraction() == 0.5);
    CHECK(net.point(3)[0].to_fraction() == 0.75);
    CHECK(net.point(5)[0].to_fraction() == 0.625);
    CHECK_THROWS_AS(net.point(8), std::out_of_range);
    const auto tern = identity_net(3, 2, 1);
    CHECK(tern.point(5)[0] == DigitVector(3, {2, 1}));
    CHECK(tern.point(5)[0].to_fraction() == doctest::Approx(7.0 / 9.0));
    const auto tiny = identity_net(2, 1, 1).points();
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0][0].to_fraction() == 0.0);
    CHECK(tiny[1][0].to_fraction() == 0.5);
  }

  TEST_CASE("net_point matches an explicit matrix product") {
    for (std::uint32_t q : {2u, 3u}) {
      const auto net = faure_matrices(q, 2, 3);
      for (std::uint64_t h = 0; h < net.num_points(); ++h)
        for (std::size_t j = 0; j < net.s(); ++j)
          CHECK(net.point(h)[j].fraction_numerator() == oracle::point_numerator(net.matrix(j), h));
    }
    const auto sob = sobol_matrices(3, 5, 7);
    for (std::uint64_t h = 0; h < sob.num_points(); ++h)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(sob.point(h)[j].fraction_numerator() == oracle::point_numerator(sob.matrix(j), h));
  }

  TEST_CASE("identity radical inverse is a permutation of the grid") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
      const auto net = identity_net(q, 3, 1);
      std::set<std::uint64_t> seen;
      for (const auto& p : net.points()) seen.insert(p[0].fraction_numerator());
      CHECK(seen.size() == net.num_points());
      CHECK(*seen.rbegin() == net.num_points() - 1);
    }
  }

  TEST_CASE("linearity of the digital construction") {
    for (std::uint32_t q : {2u, 3u}) {
      const std::size_t m = q == 2 ? 5 : 3;
      const auto net = q == 2 ? sobol_matrices(2, m) : faure_matrices(3, 3, m);
      const auto pts = net.points();
      for (std::uint64_t a = 0; a < net.num_points(); ++a)
        for (std::uint64_t b = 0; b < net.num_points(); ++b) {
          const auto c = int_oplus(a, b, q);
          for (std::size_t j = 0; j < net.s(); ++j) CHECK(oplus(pts[a][j], pts[b][j]) == pts[c][j]);
        }
    }
  }

  TEST_CASE("character sum law over the whole box") {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n : {m, m + 1}) {
        const auto net = sobol_matrices(2, m, n);
        const auto dual = oracle::dual_box(net, n);
        const std::set<std::vector<std::uint64_t>> in_dual(dual.begin(), dual.end());
        const auto pts = net.points();
        const std::uint64_t side = oracle::ipow(2, n);
        for (std::uint64_t k1 = 0; k1 < side; ++k1)
          for (std::uint64_t k2 = 0; k2 < side; ++k2) {
            const std::vector<std::uint64_t> k{k1, k2};
            std::complex<double> sum = 0.0;
            for (const auto& p : pts) sum += wal_eval_multi(k, p);
            sum /= static_cast<double>(pts.size());
            const double expect = (k1 == 0 && k2 == 0) || in_dual.count(k) ? 1.0 : 0.0;
            CHECK(std::abs(sum - expect) < 1e-12);
          }
      }
    }
  }

  TEST_CASE("faure examples") {
    CHECK(faure_matrices(2, 1, 3).matrix(0) == GenMatrix::identity(2, 3, 3));
    const auto f = faure_matrices(3, 2, 2);
    CHECK(f.matrix(1) == GenMatrix(3, 2, 2, {1, 1, 0, 1}));
    CHECK(strict_t(faure_matrices(3, 2, 3), 1, Rational::integer(1)) == 0);
    CHECK_THROWS_AS(faure_matrices(2, 3, 3), std::invalid_argument);
    // Pascal square C^2 for q = 5: entry (i, c) = binom(c, i) 2^(c-i).
    const auto f5 = faure_matrices(5, 3, 3);
    CHECK(f5.matrix(2) == GenMatrix(5, 3, 3, {1, 2, 4, 0, 1, 4, 0, 0, 1}));
  }

  TEST_CASE("faure nets have strict t zero") {
    for (std::uint32_t q : {2u, 3u, 5u})
      for (std::size_t s = 1; s <= std::min<std::size_t>(q, 3); ++s)
        for (std::size_t m = 1; m <= 3; ++m) {
          const auto net = faure_matrices(q, s, m);
          CHECK(oracle::strict_t(net, 1, static_cast<long>(m)) == 0);
        }
  }

  TEST_CASE("sobol examples") {
    CHECK(sobol_matrices(1, 4).matrix(0) == GenMatrix::identity(2, 4, 4));
    CHECK(strict_t(sobol_matrices(2, 4), 1, Rational::integer(1)) == 0);
    CHECK(sobol_matrices(3, 4, 6).n() == 6);
    CHECK_THROWS_AS(sobol_matrices(sobol_max_dimension() + 1, 4), std::invalid_argument);
    // Polynomial x + 1 with m_1 = 1: m_k = 2 m_(k-1) xor m_(k-1).
    const auto d2 = sobol_direction_integers(2, 5);
    CHECK(d2 == std::vector<std::uint64_t>{1, 3, 5, 15, 17});
  }

  TEST_CASE("sobol strict t agrees with the oracle") {
    for (std::size_t s = 1; s <= 4; ++s)
      for (std::size_t m = 1; m <= 4; ++m) {
        const auto net = sobol_matrices(s, m);
        CHECK(strict_t(net, 1, Rational::integer(1)) ==
              oracle::strict_t(net, 1, static_cast<long>(m)));
      }
  }

  TEST_CASE("sequence prefixes") {
    CHECK(sequence_prefix(identity_sequence(2, 1), 3, 3) == identity_net(2, 3, 1));
    CHECK(sequence_prefix(faure_sequence(3, 2), 2, 2) == faure_matrices(3, 2, 2));
    CHECK(sequence_prefix(sobol_sequence(3), 4, 4) == sobol_matrices(3, 4));
    const auto seq = sobol_sequence(2);
    for (std::size_t m = 1; m < 6; ++m) {
      const auto small = sequence_prefix(seq, m, 8);
      const auto big = sequence_prefix(seq, m + 1, 8);
      for (std::uint64_t h = 0; h < small.num_points(); ++h) CHECK(small.point(h) == big.point(h));
    }
    CHECK(seq.row(1, 3, 5) == seq.row(1, 3, 5));
  }

  TEST_CASE("family lookup and next_prime") {
    CHECK(family_net("identity", 3, 2, 2, 2) == identity_net(3, 2, 2));
    CHECK(family_net("faure", 3, 2, 2, 2) == faure_matrices(3, 2, 2));
    CHECK_THROWS_AS(family_net("sobol", 3, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(family_net("halton", 2, 2, 2, 2), std::invalid_argument);
    CHECK(next_prime(4) == 5);
    CHECK(next_prime(5) == 5);
    CHECK(next_prime(14) == 17);
  }

  TEST_CASE("projection and truncation") {
    const auto net = sobol_matrices(3, 3, 5);
    const std::vector<std::size_t> keep{2, 0};
    const auto p = net.project(keep);
    CHECK(p.s() == 2);
    CHECK(p.matrix(0) == net.matrix(2));
    const auto t = net.truncate_rows(3);
    CHECK(t == sobol_matrices(3, 3, 3));
  }
}
