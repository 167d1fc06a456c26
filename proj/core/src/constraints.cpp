#include "polarsn/constraints.hpp"

#include <stdexcept>

#include "polarsn/node_classifier.hpp"

namespace polar {

bool ppc_check(std::span<const std::uint8_t> root_bits,
               std::span<const std::uint8_t> source_bits) {
  const std::size_t n = root_bits.size();
  const std::size_t sq = source_bits.size();
  if (n == 0 || sq == 0 || n % sq != 0 || n <= sq)
    throw std::invalid_argument("ppc_check: bad sizes");
  for (std::size_t k = 0; k < sq; ++k) {
    std::uint8_t acc = 0;
    for (std::size_t j = k; j < n; j += sq) acc ^= root_bits[j] & 1;
    if (acc != (source_bits[k] & 1)) return false;
  }
  return true;
}

int spc_check(std::span<const std::uint8_t> root_bits, int r) {
  const std::size_t n = root_bits.size();
  const std::size_t block = std::size_t{1} << r;
  if (n == 0 || (n & (n - 1)) != 0 || block * 2 > n || r < 0)
    throw std::invalid_argument("spc_check: bad r for node size");
  std::uint8_t acc = 0;
  for (std::size_t base = block; base < n; base += 2 * block)
    for (std::size_t k = 0; k < block; ++k) acc ^= root_bits[base + k] & 1;
  return acc;
}

GammaSpc gamma_spc(std::span<const std::uint8_t> root_bits, const NodeSpec& spec) {
  if (root_bits.size() != (std::size_t{1} << spec.level))
    throw std::invalid_argument("gamma_spc: bits size != 2^level");
  GammaSpc gamma;
  const int d = spec.level - spec.q;
  gamma.values.assign(d, -1);
  for (int r : spec.spc_levels)
    gamma.values[r - spec.q] = static_cast<std::int8_t>(spc_check(root_bits, r));
  return gamma;
}

bool segment_involved(int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("segment_involved: 1-based args");
  return ((static_cast<unsigned>(k - 1) >> (t - 1)) & 1u) != 0;
}

} // namespace polar
