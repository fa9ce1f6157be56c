#pragma once

#include <stdexcept>
#include <string>

namespace hoqmc {

// Precondition violations are reported as std::invalid_argument (bad
// parameters) or std::out_of_range (index/overflow). The two types below
// cover the remaining failure classes the tools distinguish.

/// An enumeration or materialization would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree (e.g. independence search and dual-net
/// enumeration) produced inconsistent answers.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hoqmc
