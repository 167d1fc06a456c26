#pragma once

#include <array>

#include "polarsn/node_classifier.hpp"

namespace polar {

// Time-step accounting: one step per real-valued add/compare stage, bit
// operations free.  Hard decisions and the combine stage cost nothing; a full
// Wagner pass (hard decide + parity + single flip) costs one step.
struct CostRules {
  int f_step = 1;
  int g_step = 1;
  int combine_step = 0;
  int rate0 = 0;
  int rate1 = 0;
  int rep = 1;  // one summation stage
  int spc = 1;  // one Wagner pass
  // Sequence node with frozen/repetition ancestors: fold the node LLRs into
  // one accumulated value per candidate sign pattern (stage count indexed by
  // the level span down to the source, clamped to the last entry), then pick
  // the winner with a compare tree capped at sr0_select_cap stages.  A
  // repetition source costs nothing extra: its summation merges into the fold.
  std::array<int, 8> sr0_fold = {1, 1, 1, 1, 1, 2, 1, 2};
  int sr0_select_cap = 2;
  // Sequence node with information/parity ancestors: fold stages down to the
  // source, one joint Wagner pass across the parity segments, and a two-step
  // penalty-metric evaluation plus flip when some segmental check is odd.
  int sr1_fold_near = 1;  // source directly below the node
  int sr1_fold_far = 3;   // deeper sources
  int sr1_wagner = 1;
  int sr1_flip = 2;
};

struct LatencyBounds {
  long lb = 0;
  long ub = 0;
};

// Fixed-part / worst-case time steps of one decoded node, recursing through
// sequence-node sources.  The lb assumes every segmental check comes out
// even; the ub adds the flip stage of each parity-constrained sequence node
// whose source either carries no payload of its own or sits at least two
// levels down (adjacent payload sources absorb the flip into their Wagner
// stage).  Plans nested inside generic sources count at their fixed part.
LatencyBounds node_bounds(const NodeSpec& spec, const CostRules& rules = {});

// Latency interval of a full decode plan: traversal f/g steps for every
// internal pruned-tree node plus the per-entry node bounds.
LatencyBounds code_bounds(const DecodePlan& plan, const CostRules& rules = {});

// Stage counts of the individual sequence-node pipeline pieces.
int sr0_fold_steps(int span, const CostRules& rules);
int sr0_select_steps(int forks, const CostRules& rules);
int sr1_fold_steps(int span, const CostRules& rules);

// 2N - 2 under the default rules.
long plain_sc_steps(int n, const CostRules& rules = {});

// Steps of a generic source decoded by plain SC inside a sequence node.
long generic_steps(int level, const CostRules& rules);

} // namespace polar
