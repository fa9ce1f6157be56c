#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoqmc/netgen.hpp"

namespace hoqmc {

namespace {

struct SobolEntry {
  unsigned degree;
  std::uint32_t a;  // inner coefficients of the primitive polynomial, a_1 first (MSB)
  std::array<std::uint32_t, 5> m_init;
};

// Joe & Kuo, new-joe-kuo-6.21201, dimensions 2..10. Dimension 1 is the
// identity (m_k = 1 for all k).
constexpr std::array<SobolEntry, 9> kTable = {{
    {1, 0, {1, 0, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0, 0}},
    {3, 1, {1, 3, 1, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0}},
    {4, 1, {1, 1, 3, 3, 0}},
    {4, 4, {1, 3, 5, 13, 0}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
}};

}  // namespace

std::size_t sobol_max_dimension() { return kTable.size() + 1; }

std::vector<std::uint64_t> sobol_direction_integers(std::size_t dim, std::size_t count) {
  if (dim == 0 || dim > sobol_max_dimension())
    throw std::out_of_range("sobol dimension " + std::to_string(dim) + " not in table");
  if (count > 64) throw std::out_of_range("at most 64 sobol direction numbers are supported");
  std::vector<std::uint64_t> m(count, 1);
  if (dim == 1) return m;
  const auto& e = kTable[dim - 2];
  const unsigned s = e.degree;
  for (std::size_t k = 0; k < count; ++k) {
    if (k < s) {
      m[k] = e.m_init[k];
      continue;
    }
    std::uint64_t v = m[k - s] ^ (m[k - s] << s);
    for (unsigned i = 1; i < s; ++i)
      if ((e.a >> (s - 1 - i)) & 1u) v ^= m[k - i] << i;
    m[k] = v;
  }
  return m;
}

}  // namespace hoqmc
