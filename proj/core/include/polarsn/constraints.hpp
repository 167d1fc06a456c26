#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polar {

struct NodeSpec;

// State of the segmental parity checks of one node, one entry per level
// t = 1 .. p-q (level r = q+t-1): 0/1 = realized parity of an SPC level,
// -1 = sentinel for a Rate-1 level (no constraint).
struct GammaSpc {
  std::vector<std::int8_t> values;

  int order() const { return static_cast<int>(values.size()); }
  bool any_odd() const {
    for (auto v : values)
      if (v == 1) return true;
    return false;
  }
};

// Parallel parity checks: XOR of root_bits over each stride of 2^q positions
// equals the corresponding source bit.  root_bits.size() = 2^p,
// source_bits.size() = 2^q, p > q.
bool ppc_check(std::span<const std::uint8_t> root_bits,
               std::span<const std::uint8_t> source_bits);

// Value (0 or 1) of the segmental parity check at level r: XOR of root_bits
// over the odd half-blocks of size 2^r (1-based positions (2j-1)*2^r + k).
int spc_check(std::span<const std::uint8_t> root_bits, int r);

// Realized gamma for a classified sequence node: spc_check at its SPC levels,
// -1 sentinels at its Rate-1 levels.
GammaSpc gamma_spc(std::span<const std::uint8_t> root_bits, const NodeSpec& spec);

// Whether segment k (1-based, of 2^(p-q) segments) participates in the t-th
// segmental parity check.  Closed form of the involvement sets: true iff
// floor((k-1) / 2^(t-1)) is odd.
bool segment_involved(int t, int k);

} // namespace polar
