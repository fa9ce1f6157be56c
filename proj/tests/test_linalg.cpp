#include <doctest.h>

#include <random>

#include "hoqmc/linalg.hpp"
#include "hoqmc/rational.hpp"
#include "oracles.hpp"

using namespace hoqmc;

TEST_SUITE("linalg") {
  TEST_CASE("echelon basis detects dependence") {
    EchelonBasis b(3, 3);
    CHECK(b.insert(std::vector<Digit>{1, 2, 0}));
    CHECK(b.insert(std::vector<Digit>{0, 1, 1}));
    CHECK_FALSE(b.insert(std::vector<Digit>{2, 1, 0}));  // 2 * first row
    CHECK_FALSE(b.insert(std::vector<Digit>{1, 0, 1}));  // first + second
    CHECK(b.rank() == 2);
  }

  TEST_CASE("rank agrees with the oracle on random matrices") {
    std::mt19937 gen(7);
    for (std::uint32_t q : {2u, 3u, 5u}) {
      std::uniform_int_distribution<std::uint32_t> dig(0, q - 1);
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 5;
        std::vector<DigitRow> rows(r, DigitRow(c));
        for (auto& row : rows)
          for (auto& v : row) v = (trial % 3 == 0) ? dig(gen) % 2 : dig(gen);
        oracle::Matrix om(rows.begin(), rows.end());
        CHECK(rank(rows, q) == oracle::rank(om, q));
        CHECK((rank(rows, q) < r) == oracle::dependent_by_search(om, q));
      }
    }
  }

  TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 gen(11);
    for (std::uint32_t q : {2u, 3u}) {
      std::uniform_int_distribution<std::uint32_t> dig(0, q - 1);
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 3, c = 2 + trial % 4;
        std::vector<DigitRow> a(r, DigitRow(c));
        for (auto& row : a)
          for (auto& v : row) v = dig(gen);
        const auto basis = kernel_basis(a, c, q);
        CHECK(basis.size() == c - rank(a, q));
        for (const auto& v : basis)
          for (const auto& row : a) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < c; ++k) acc += static_cast<std::uint64_t>(row[k]) * v[k];
            CHECK(acc % q == 0);
          }
        if (!basis.empty()) CHECK(rank(basis, q) == basis.size());
      }
    }
  }
}

TEST_SUITE("rational") {
  TEST_CASE("normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("2") == Rational::integer(2));
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational::integer(1).to_string() == "1/1");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  }

  TEST_CASE("ordering and floor") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(min(Rational(3, 2), Rational::integer(1)) == Rational::integer(1));
    CHECK(Rational(3, 2).floor_times(5) == 7);
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  }
}
