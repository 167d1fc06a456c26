#include "polarsn/latency_model.hpp"

#include <algorithm>

namespace polar {

long generic_steps(int level, const CostRules& rules) {
  const long internal = (1L << level) - 1;
  return internal * (rules.f_step + rules.g_step);
}

int sr0_fold_steps(int span, const CostRules& rules) {
  const int i = std::min<int>(span, (int)rules.sr0_fold.size() - 1);
  return rules.sr0_fold[(size_t)i];
}

int sr0_select_steps(int forks, const CostRules& rules) {
  return std::min((forks + 1) / 2, rules.sr0_select_cap);
}

int sr1_fold_steps(int span, const CostRules& rules) {
  return span == 1 ? rules.sr1_fold_near : rules.sr1_fold_far;
}

LatencyBounds node_bounds(const NodeSpec& spec, const CostRules& rules) {
  switch (spec.kind) {
    case NodeKind::Rate0: return {rules.rate0, rules.rate0};
    case NodeKind::Rate1: return {rules.rate1, rules.rate1};
    case NodeKind::Rep: return {rules.rep, rules.rep};
    case NodeKind::Spc: return {rules.spc, rules.spc};
    case NodeKind::Generic: {
      if (spec.sub_plan) {
        const LatencyBounds sub = code_bounds(*spec.sub_plan, rules);
        return {sub.lb, sub.lb};
      }
      const long t = generic_steps(spec.level, rules);
      return {t, t};
    }
    case NodeKind::Sr1Spc: {
      const int span = spec.level - spec.source->level;
      const bool parity = !spec.spc_levels.empty();
      LatencyBounds b;
      bool flip = false;
      if (spec.source->kind == NodeKind::Rate0) {
        b.lb = rules.sr1_wagner;
        flip = parity;
      } else if (spec.source->kind == NodeKind::Rep) {
        // Both repetition values ride along with the fold; the Wagner pass
        // resolves the parity segments against the winner.
        b.lb = rules.sr1_fold_near + (parity ? rules.sr1_wagner : 0);
        flip = parity;
      } else {
        const LatencyBounds src = node_bounds(*spec.source, rules);
        const int fold = sr1_fold_steps(span, rules);
        const int wagner = parity ? rules.sr1_wagner : 0;
        b.lb = fold + src.lb + wagner;
        b.ub = fold + src.ub + wagner;
        flip = parity && span >= 2;
        if (flip) b.ub += rules.sr1_flip;
        return b;
      }
      b.ub = b.lb + (flip ? rules.sr1_flip : 0);
      return b;
    }
    case NodeKind::Sr0Rep: {
      LatencyBounds src = node_bounds(*spec.source, rules);
      if (spec.source->kind == NodeKind::Rep) src = {0, 0};
      const int span = spec.level - spec.source->level;
      const int fixed = sr0_fold_steps(span, rules) +
                        sr0_select_steps((int)spec.rep_levels.size(), rules);
      return {fixed + src.lb, fixed + src.ub};
    }
  }
  return {};
}

LatencyBounds code_bounds(const DecodePlan& plan, const CostRules& rules) {
  LatencyBounds total;
  for (const auto& node : plan.tree) {
    if (node.entry >= 0) {
      const LatencyBounds b = node_bounds(plan.entries[node.entry], rules);
      total.lb += b.lb;
      total.ub += b.ub;
    } else {
      const long t = rules.f_step + rules.g_step + rules.combine_step;
      total.lb += t;
      total.ub += t;
    }
  }
  return total;
}

long plain_sc_steps(int n, const CostRules& rules) {
  return ((1L << n) - 1) * (rules.f_step + rules.g_step + rules.combine_step);
}

} // namespace polar
