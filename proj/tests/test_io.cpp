#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "hoqmc/format.hpp"
#include "hoqmc/interlace.hpp"
#include "hoqmc/io.hpp"

using namespace hoqmc;

TEST_SUITE("io") {
  TEST_CASE("matrix files round trip") {
    for (const auto& net : {sobol_matrices(3, 4, 6), faure_matrices(5, 4, 3),
                            interleave_matrices(sobol_matrices(2, 5), 2)}) {
      std::ostringstream a;
      write_matrix_file(a, net);
      std::istringstream in(a.str());
      const auto back = read_matrix_file(in);
      CHECK(back == net);
      std::ostringstream b;
      write_matrix_file(b, back);
      CHECK(a.str() == b.str());
    }
    std::ostringstream os;
    write_matrix_file(os, identity_net(2, 2, 1));
    CHECK(os.str() == "2 2 2 1\n1 0\n0 1\n");
  }

  TEST_CASE("comments and blank lines are skipped") {
    std::istringstream in("# made by hand\n3 2 2 1\n\n1 2\n# middle\n0 1\n\n");
    const auto net = read_matrix_file(in);
    CHECK(net.matrix(0) == GenMatrix(3, 2, 2, {1, 2, 0, 1}));
  }

  TEST_CASE("malformed matrix files") {
    const char* bad[] = {
        "",                          // no header
        "2 2 2\n1 0\n0 1\n",         // short header
        "2 2 2 1\n1 0\n",            // missing row
        "2 2 2 1\n1 0\n0 1 1\n",     // wide row
        "2 2 2 1\n1 0\n0 2\n",       // digit out of range
        "4 1 1 1\n1\n",              // composite base
        "2 1 1 1\n1\n1\n",           // trailing data
        "2 1 1 1\nx\n",              // not a number
        "2 0 1 1\n",                 // zero rows
    };
    for (const char* text : bad) {
      CAPTURE(text);
      std::istringstream in(text);
      CHECK_THROWS_AS(read_matrix_file(in), std::invalid_argument);
    }
  }

  TEST_CASE("points csv") {
    std::ostringstream os;
    write_points_csv(os, identity_net(2, 2, 1));
    CHECK(os.str() == "0\n0.5\n0.25\n0.75\n");
    std::ostringstream two;
    write_points_csv(two, sobol_matrices(2, 1));
    CHECK(two.str() == "0,0\n0.5,0.5\n");
  }

  TEST_CASE("coordinate formatting") {
    CHECK(format_coordinate(DigitVector(2, {1, 0, 1})) == "0.625");
    CHECK(format_coordinate(DigitVector::zeros(2, 5)) == "0");
    CHECK(format_coordinate(DigitVector(5, {1, 2})) == "0.28");
    CHECK(format_coordinate(DigitVector(3, {2, 1})) == "0.77777777777777779");
    std::vector<Digit> deep(60, 1);
    const auto s = format_coordinate(DigitVector(2, deep));
    CHECK(s.size() == 62);
    CHECK(s.rfind("0.99999999999999999913", 0) == 0);
  }

  TEST_CASE("double formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("comment header") {
    CHECK(comment_header({{"q", "2"}, {"family", "sobol"}}) == "# q=2\n# family=sobol\n");
  }
}
