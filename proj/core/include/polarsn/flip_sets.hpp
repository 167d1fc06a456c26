#pragma once

#include <vector>

#include "polarsn/constraints.hpp"

namespace polar {

// A candidate correction for odd segmental checks: flip the bit at offset m in
// segment k1 and in segment k2 (segments are the 2^(p-q) contiguous blocks of
// 2^q bits).  Stored normalized with k1 < k2; m is 0 until a concrete bit
// offset has been chosen by the decoder.
struct FlipCoordinate {
  int k1 = 0;
  int k2 = 0;
  int m = 0;

  friend bool operator==(const FlipCoordinate&, const FlipCoordinate&) = default;
  friend auto operator<=>(const FlipCoordinate&, const FlipCoordinate&) = default;
};

// All feasible flip coordinates for one gamma pattern, sorted.
struct FlippingSet {
  GammaSpc gamma;
  std::vector<FlipCoordinate> coords;
};

// Feasible set when every level carries a real segmental check (no -1
// sentinels): recursive doubling construction.  Empty when gamma is all zero.
FlippingSet gen_sspc(const GammaSpc& gamma);

// General form allowing -1 sentinel levels; sentinel levels are unconstrained,
// which widens both the base set and the per-level splits (a sentinel level
// splits each coordinate four ways instead of two).
FlippingSet gen_sr1spc(const GammaSpc& gamma);

// Brute-force reference: enumerate every segment pair and keep those whose
// involvement pattern fixes all odd checks and preserves all even ones.
// Defined as empty when gamma has no odd entry (no correction is needed, so
// no coordinate is feasible).
std::vector<FlipCoordinate> feasible_oracle(const GammaSpc& gamma);

} // namespace polar
