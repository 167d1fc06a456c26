#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polar {

enum class Construction { FiveG, GaussianApprox };

// A polar code P(N, K): N = 2^n leaves, K information bits selected by a
// reliability order.  indicator[i] == 1 iff leaf i carries an information bit
// (the remaining N-K leaves are frozen to zero).  Indices are 0-based here and
// in every serialized form.
struct PolarCode {
  int n = 0;
  int N = 0;
  int K = 0;
  Construction construction = Construction::FiveG;
  double design_snr_db = 0.0;          // used by GaussianApprox only
  std::vector<int> info_set;           // sorted, 0-based, size K
  std::vector<std::uint8_t> indicator; // size N, 1 = information leaf

  double rate() const { return N ? double(K) / N : 0.0; }
};

// Build P(2^n, K) with the given construction.  design_snr_db is the Eb/N0
// operating point assumed by the Gaussian approximation; it is ignored for
// the 5G sequence.  Throws std::invalid_argument on bad n/K.
PolarCode construct(int n, int K, Construction method, double design_snr_db = 0.0);

// Build a code from an explicit frozen set (0-based indices); everything not
// listed is an information leaf.
PolarCode construct_frozen(int n, const std::vector<int>& frozen_set);

// Mean bit-channel LLRs under the Gaussian approximation for an AWGN channel
// at the given design Eb/N0 and code rate, indexed by leaf.  Larger = more
// reliable.  The channel LLR mean is 4 * rate * 10^(design_snr_db/10).
std::vector<double> ga_reliability(int n, double design_snr_db, double rate);

// In-place polar transform x <- x * G_N over GF(2); involutive.
void polar_transform(std::span<std::uint8_t> bits);

// Scatter msg into the information leaves and apply the polar transform.
// msg.size() must equal code.K.
std::vector<std::uint8_t> encode(const PolarCode& code,
                                 std::span<const std::uint8_t> msg);

// ---- code descriptor files -------------------------------------------------
// Flat key=value text: n, k, construction (5g|ga), design_snr_db, and an
// optional frozen_override (comma-separated 0-based indices) which takes
// precedence over the named construction.

std::string descriptor_to_string(const PolarCode& code,
                                 const std::optional<std::vector<int>>& frozen_override = {});
PolarCode parse_descriptor(std::istream& in);
PolarCode load_descriptor(const std::string& path);
void save_descriptor(const PolarCode& code, const std::string& path);

} // namespace polar
