#include "hoqmc/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hoqmc/format.hpp"

namespace hoqmc {

void write_matrix_file(std::ostream& os, const DigitalNet& net) {
  os << net.base() << ' ' << net.n() << ' ' << net.m() << ' ' << net.s() << '\n';
  for (const auto& c : net.matrices())
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t k = 0; k < c.cols(); ++k) os << (k ? " " : "") << c(r, k);
      os << '\n';
    }
}

namespace {

std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw std::invalid_argument("matrix file line " + std::to_string(line_no) +
                                  ": '" + tok + "' is not a non-negative integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

DigitalNet read_matrix_file(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> std::vector<std::uint64_t> {
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      return parse_numbers(line, line_no);
    }
    throw std::invalid_argument("matrix file ends early after line " + std::to_string(line_no));
  };
  const auto header = next();
  if (header.size() != 4)
    throw std::invalid_argument("matrix file header must be 'q n m s', line " +
                                std::to_string(line_no));
  const auto q = static_cast<std::uint32_t>(header[0]);
  const std::size_t n = header[1], m = header[2], s = header[3];
  if (header[0] > kMaxBase) throw std::invalid_argument("matrix file: base too large");
  if (n == 0 || m == 0 || s == 0 || n > 4096 || m > 64 || s > 4096)
    throw std::invalid_argument("matrix file header has an unsupported shape");
  std::vector<GenMatrix> mats;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Digit> entries;
    entries.reserve(n * m);
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = next();
      if (row.size() != m)
        throw std::invalid_argument("matrix file line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(m) + " digits, found " +
                                    std::to_string(row.size()));
      for (auto v : row) {
        if (v >= q)
          throw std::invalid_argument("matrix file line " + std::to_string(line_no) + ": digit " +
                                      std::to_string(v) + " >= q");
        entries.push_back(static_cast<Digit>(v));
      }
    }
    mats.emplace_back(q, n, m, std::move(entries));
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#')
      throw std::invalid_argument("matrix file has trailing data at line " +
                                  std::to_string(line_no));
  }
  return DigitalNet(std::move(mats));
}

void write_points_csv(std::ostream& os, const DigitalNet& net) {
  for (std::uint64_t h = 0; h < net.num_points(); ++h) {
    const Point x = net.point(h);
    for (std::size_t j = 0; j < x.size(); ++j) os << (j ? "," : "") << format_coordinate(x[j]);
    os << '\n';
  }
}

std::string comment_header(const ParamList& params) {
  std::string out;
  for (const auto& [k, v] : params) out += "# " + k + "=" + v + "\n";
  return out;
}

}  // namespace hoqmc
