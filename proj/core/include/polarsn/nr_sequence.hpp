#pragma once

#include <array>
#include <vector>

namespace polar {

// Universal reliability sequence Q for N_max = 1024 from 3GPP TS 38.212
// Table 5.3.1.2-1, ordered from least to most reliable bit index.
const std::array<unsigned short, 1024>& nr_universal_sequence();

// Subsequence of Q restricted to indices < 2^n (0 <= n <= 10), keeping the
// ascending reliability order.  The nested property of the universal sequence
// makes this the rate-matched reliability order for length 2^n.
std::vector<int> nr_reliability_sequence(int n);

} // namespace polar
