#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarsn/latency_model.hpp"
#include "polarsn/node_classifier.hpp"
#include "polarsn/polar_code.hpp"
#include "polarsn/seq_decoders.hpp"

namespace polar {

// Decoder that walks a pruned DecodePlan: internal plan nodes run the f/g/combine
// recursion, plan leaves dispatch to the specialized node decoders. Tracks the
// realized time-step count of the last decode under the plan's cost rules.
class FastDecoder {
public:
  FastDecoder(const PolarCode& code, const DecodePlan& plan,
              FlipSearch flip_search = FlipSearch::JointOverOffsets,
              CostRules rules = CostRules{});

  // Returns the decoded message bits (info positions). `llr` has size N.
  std::vector<std::uint8_t> decode(std::span<const double> llr);

  // Root-level codeword estimate from the last decode.
  const std::vector<std::uint8_t>& last_codeword() const { return beta_[0]; }
  long last_steps() const { return last_steps_; }
  const CostRules& rules() const { return rules_; }

private:
  void run(int node_idx, int depth);

  const PolarCode* code_;
  DecodePlan plan_;
  FlipSearch flip_search_;
  CostRules rules_;
  long last_steps_ = 0;
  // Per-depth scratch: alpha_[d] holds LLRs for the node being processed at
  // depth d (size 2^(n-d)); beta_[d] its codeword bits.
  std::vector<std::vector<double>> alpha_;
  std::vector<std::vector<std::uint8_t>> beta_;
};

// One-shot convenience: classify with `features` + default options and decode.
std::vector<std::uint8_t> fast_decode(const PolarCode& code, std::span<const double> llr,
                                      FeatureSet features, long* steps = nullptr);

} // namespace polar
