#include "polarsn/flip_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polar {

namespace {

using Pair = std::pair<int, int>;

bool has_odd(std::span<const std::int8_t> g) {
  return std::any_of(g.begin(), g.end(), [](std::int8_t v) { return v == 1; });
}

// Base set when position d (1-based) holds the only odd check of g[0..d-1]:
// pairs of segments that differ at level d, agree at every even-check level
// and are free at sentinel levels.  With no sentinels this is the classic
// {k, k + 2^(d-1)} interval set.
std::set<Pair> base_set(std::span<const std::int8_t> g) {
  const int d = static_cast<int>(g.size());
  std::vector<int> sentinel_bits;
  for (int t = 1; t < d; ++t)
    if (g[t - 1] == -1) sentinel_bits.push_back(t - 1);

  std::set<Pair> out;
  const int top = 1 << (d - 1);
  for (int sub = 0; sub < (1 << sentinel_bits.size()); ++sub) {
    int x = top;
    for (std::size_t j = 0; j < sentinel_bits.size(); ++j)
      if (sub & (1 << j)) x |= 1 << sentinel_bits[j];
    for (int a = 0; a < (1 << d); ++a) {
      const int b = a ^ x;
      if (a < b) out.insert({a + 1, b + 1});
    }
  }
  return out;
}

std::set<Pair> rec_general(std::span<const std::int8_t> g) {
  const int d = static_cast<int>(g.size());
  if (!has_odd(g)) return {};
  if (d == 1) return {{1, 2}}; // g[0] == 1 here
  if (g[d - 1] == 1 && !has_odd(g.first(d - 1))) return base_set(g);

  const std::set<Pair> prev = rec_general(g.first(d - 1));
  const int h = 1 << (d - 1);
  std::set<Pair> out;
  for (const auto& [k1, k2] : prev) {
    switch (g[d - 1]) {
      case 0: // even check: keep both segments on the same side
        out.insert({k1, k2});
        out.insert({k1 + h, k2 + h});
        break;
      case 1: // odd check: exactly one segment crosses
        out.insert({std::min(k1, k2 + h), std::max(k1, k2 + h)});
        out.insert({std::min(k2, k1 + h), std::max(k2, k1 + h)});
        break;
      default: // sentinel: unconstrained, all four placements
        out.insert({k1, k2});
        out.insert({k1 + h, k2 + h});
        out.insert({std::min(k1, k2 + h), std::max(k1, k2 + h)});
        out.insert({std::min(k2, k1 + h), std::max(k2, k1 + h)});
        break;
    }
  }
  return out;
}

FlippingSet to_set(const GammaSpc& gamma, const std::set<Pair>& pairs) {
  FlippingSet fs;
  fs.gamma = gamma;
  fs.coords.reserve(pairs.size());
  for (const auto& [k1, k2] : pairs) fs.coords.push_back({k1, k2, 0});
  return fs;
}

} // namespace

FlippingSet gen_sspc(const GammaSpc& gamma) {
  for (auto v : gamma.values)
    if (v != 0 && v != 1)
      throw std::invalid_argument("gen_sspc: gamma must contain checks only");
  return to_set(gamma, rec_general(gamma.values));
}

FlippingSet gen_sr1spc(const GammaSpc& gamma) {
  for (auto v : gamma.values)
    if (v < -1 || v > 1)
      throw std::invalid_argument("gen_sr1spc: gamma entries must be -1, 0 or 1");
  return to_set(gamma, rec_general(gamma.values));
}

std::vector<FlipCoordinate> feasible_oracle(const GammaSpc& gamma) {
  if (!gamma.any_odd()) return {};
  const int d = gamma.order();
  const int segments = 1 << d;
  std::vector<FlipCoordinate> out;
  for (int k1 = 1; k1 <= segments; ++k1) {
    for (int k2 = k1 + 1; k2 <= segments; ++k2) {
      bool ok = true;
      for (int t = 1; t <= d && ok; ++t) {
        const bool i1 = segment_involved(t, k1);
        const bool i2 = segment_involved(t, k2);
        if (gamma.values[t - 1] == 1)
          ok = i1 != i2;
        else if (gamma.values[t - 1] == 0)
          ok = i1 == i2;
      }
      if (ok) out.push_back({k1, k2, 0});
    }
  }
  return out;
}

} // namespace polar
