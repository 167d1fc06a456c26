#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarsn/latency_model.hpp"
#include "polarsn/node_classifier.hpp"

namespace polar {

// How the flip metric searches the bit offset m inside the two segments of a
// candidate coordinate.
enum class FlipSearch {
  JointOverOffsets,          // minimize the penalty over every (coordinate, m)
  CheapestOffsetPerCoordinate // fix m per coordinate at the least-|llr| offset
};

struct SeqDecodeOptions {
  FlipSearch flip_search = FlipSearch::JointOverOffsets;
  const CostRules* rules = nullptr; // optional realized-step accounting
  long* steps = nullptr;
};

std::vector<std::uint8_t> decode_rate0(std::size_t len);
std::vector<std::uint8_t> decode_rate1(std::span<const double> llr);
std::vector<std::uint8_t> decode_rep(std::span<const double> llr);
// Wagner decode: hard decisions, then if their parity differs from check_bit
// flip the least reliable position (ties -> lowest index).
std::vector<std::uint8_t> decode_spc(std::span<const double> llr, int check_bit = 0);

// Sequence nodes.  `indicator` is the leaf pattern of the whole node (1 =
// information leaf); it supplies the frozen structure of generic sources.
std::vector<std::uint8_t> decode_sr0rep(std::span<const double> llr,
                                        const NodeSpec& spec,
                                        std::span<const std::uint8_t> indicator,
                                        const SeqDecodeOptions& opt = {});
std::vector<std::uint8_t> decode_sr1(std::span<const double> llr,
                                     const NodeSpec& spec,
                                     std::span<const std::uint8_t> indicator,
                                     const SeqDecodeOptions& opt = {});
std::vector<std::uint8_t> decode_sr1spc(std::span<const double> llr,
                                        const NodeSpec& spec,
                                        std::span<const std::uint8_t> indicator,
                                        const SeqDecodeOptions& opt = {});

// Dispatch on spec.kind (plain SC for Generic).
// Walks a nested pruned plan over a subtree (used for Generic sequence-node
// sources with inner structure). `indicator` covers exactly the subtree.
std::vector<std::uint8_t> decode_plan_subtree(std::span<const double> llr,
                                              const DecodePlan& plan,
                                              std::span<const std::uint8_t> indicator,
                                              const SeqDecodeOptions& opt = {});

std::vector<std::uint8_t> decode_node(std::span<const double> llr,
                                      const NodeSpec& spec,
                                      std::span<const std::uint8_t> indicator,
                                      const SeqDecodeOptions& opt = {});

} // namespace polar
