#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarsn/polar_code.hpp"

namespace polar {

// Min-sum check-node update: sign(a)sign(b) * min(|a|, |b|).
double f_op(double a, double b);
// Variable-node update given the left-branch bit decision.
double g_op(double a, double b, std::uint8_t left_bit);
// Parent codeword from child codewords: (left xor right, right).
void combine(std::span<const std::uint8_t> left, std::span<const std::uint8_t> right,
             std::span<std::uint8_t> out);
// Hard decision, with llr == 0 mapped to bit 0.
inline std::uint8_t hard_decision(double llr) { return llr < 0.0 ? 1 : 0; }

struct ScResult {
  std::vector<std::uint8_t> message;  // size K
  std::vector<std::uint8_t> codeword; // size N, re-encoded decisions
};

// Successive-cancellation decoder over the full code tree.  Holds per-level
// scratch buffers, so reuse one instance per thread.
class ScDecoder {
 public:
  explicit ScDecoder(const PolarCode& code);
  ScResult decode(std::span<const double> channel_llr);

 private:
  const PolarCode& code_;
  std::vector<std::vector<double>> alpha_;         // one buffer per level
  std::vector<std::vector<std::uint8_t>> beta_;    // right/current child bits
  std::vector<std::vector<std::uint8_t>> beta_left_; // parked left-child bits
};

// Convenience wrapper for one-off decodes.
ScResult sc_decode(const PolarCode& code, std::span<const double> channel_llr);

// Decode an arbitrary subtree: `indicator` gives the leaf pattern (1 = info)
// and must have power-of-two size equal to llr.size().  Returns the subtree
// codeword (beta at the subtree root).  Used by fast decoders for generic
// source nodes and by tests.
std::vector<std::uint8_t> sc_decode_subtree(std::span<const double> llr,
                                            std::span<const std::uint8_t> indicator);

} // namespace polar
