#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hoqmc/netgen.hpp"

namespace hoqmc {

/// Matrix file: a header line "q n m s", then for each coordinate n lines
/// of m space-separated digits. Output is canonical (single spaces, '\n'),
/// so reading and writing a file reproduces it byte for byte.
void write_matrix_file(std::ostream& os, const DigitalNet& net);

/// Lines starting with '#' and blank lines are skipped. Throws
/// std::invalid_argument naming the offending line on malformed input.
DigitalNet read_matrix_file(std::istream& is);

/// One CSV row per point in index order, s columns, via format_coordinate.
void write_points_csv(std::ostream& os, const DigitalNet& net);

using ParamList = std::vector<std::pair<std::string, std::string>>;

/// "# key=value" lines, one per parameter, in the given order.
std::string comment_header(const ParamList& params);

}  // namespace hoqmc
