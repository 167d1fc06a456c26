#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polarsn/flip_sets.hpp"
#include "polarsn/polar_code.hpp"

namespace polar {

enum class NodeKind { Rate0, Rate1, Rep, Spc, Sr0Rep, Sr1Spc, Generic };
enum class FeatureSet { PlainSc, Fssc, SnFsc };

const char* to_string(NodeKind kind);
const char* to_string(FeatureSet features);

struct DecodePlan;

// One decoded unit of the pruned tree.  level = p (2^p leaves), index is the
// 1-based position among the level-p nodes, leaf_begin the first covered leaf.
//
// Sequence nodes carry their source level q and the levels r in [q, p) whose
// chain sibling is an SPC (Sr1Spc) or a REP (Sr0Rep) node; the remaining chain
// levels hold Rate-1 / Rate-0 siblings respectively.  `source` is the
// recursively classified leftmost (Sr1Spc) or rightmost (Sr0Rep) subtree at
// level q.  A Generic source with prunable inner structure carries a nested
// `sub_plan` over its subtree; a Generic node without one falls back to plain
// SC over the subtree.
struct NodeSpec {
  NodeKind kind = NodeKind::Generic;
  int level = 0;
  long index = 1;
  std::size_t leaf_begin = 0;

  int q = -1;
  std::vector<int> spc_levels;
  std::vector<int> rep_levels;
  // Shared so plans stay cheap to copy; treat the pointees as frozen once
  // classify() returns.
  std::shared_ptr<NodeSpec> source;
  std::shared_ptr<DecodePlan> sub_plan;

  // Sr1Spc only: feasible flip coordinates for every odd/even pattern of the
  // SPC levels, indexed by a bitmask over spc_levels (bit j <-> spc_levels[j]
  // is odd).  Entry 0 (all even) stays empty.
  std::vector<std::vector<FlipCoordinate>> flip_by_mask;

  int length() const { return 1 << level; }
};

NodeSpec make_basic(NodeKind kind, int level, std::size_t leaf_begin = 0);
NodeSpec make_sr1spc(int p, int q, std::vector<int> spc_levels, NodeSpec source,
                     std::size_t leaf_begin = 0);
NodeSpec make_sr0rep(int p, int q, std::vector<int> rep_levels, NodeSpec source,
                     std::size_t leaf_begin = 0);

// Fill spec.flip_by_mask (and recursively its source's) from gen_sr1spc.
void build_flip_tables(NodeSpec& spec);

struct ClassifierOptions {
  int min_special_len = 2;     // smallest REP/SPC plan entry
  int min_seq_len = 4;         // smallest Sr0Rep / Sr1Spc plan entry
  int min_spc_sibling_len = 4; // smallest SPC sibling inside an Sr1Spc chain
  int min_rep_sibling_len = 2; // smallest REP sibling inside an Sr0Rep chain
  // Smallest admissible source per sequence-node kind (caps the chain depth).
  int min_sr1_source_len = 4;
  int min_sr0_source_len = 2;
};

// Pruned decode tree: entries are the decoded units left to right; tree nodes
// reference entries at their leaves.  tree[0] is the root.
struct PlanNode {
  int level = 0;
  std::size_t leaf_begin = 0;
  int left = -1;
  int right = -1;
  int entry = -1; // index into entries when this tree node is a plan leaf
};

struct DecodePlan {
  FeatureSet features = FeatureSet::SnFsc;
  ClassifierOptions options;
  std::vector<NodeSpec> entries;
  std::vector<PlanNode> tree;
};

// Match the code tree top-down: a node becomes a plan entry for the first
// matching pattern in the order Rate-0/Rate-1, REP, SPC, Sr1Spc, Sr0Rep
// (feature set permitting), otherwise both children are visited.  Sequence
// chains extend as deep as the sibling patterns allow (smallest q).
DecodePlan classify(const PolarCode& code, FeatureSet features,
                    const ClassifierOptions& options = {});

// Histogram {node length -> count} of Sr1Spc entries that carry at least one
// segmental parity check (pure parallel-check chains are skipped); with
// include_nested, sequence-node sources are scanned recursively as well.
std::map<int, int> count_sr1spc(const DecodePlan& plan, bool include_nested = false);

std::string plan_to_string(const DecodePlan& plan);

} // namespace polar
