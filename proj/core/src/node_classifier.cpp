#include "polarsn/node_classifier.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace polar {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Rate0: return "rate0";
    case NodeKind::Rate1: return "rate1";
    case NodeKind::Rep: return "rep";
    case NodeKind::Spc: return "spc";
    case NodeKind::Sr0Rep: return "sr0rep";
    case NodeKind::Sr1Spc: return "sr1spc";
    case NodeKind::Generic: return "generic";
  }
  return "?";
}

const char* to_string(FeatureSet features) {
  switch (features) {
    case FeatureSet::PlainSc: return "sc";
    case FeatureSet::Fssc: return "fssc";
    case FeatureSet::SnFsc: return "snfsc";
  }
  return "?";
}

NodeSpec make_basic(NodeKind kind, int level, std::size_t leaf_begin) {
  NodeSpec s;
  s.kind = kind;
  s.level = level;
  s.leaf_begin = leaf_begin;
  s.index = static_cast<long>(leaf_begin >> level) + 1;
  return s;
}

NodeSpec make_sr1spc(int p, int q, std::vector<int> spc_levels, NodeSpec source,
                     std::size_t leaf_begin) {
  NodeSpec s = make_basic(NodeKind::Sr1Spc, p, leaf_begin);
  s.q = q;
  std::sort(spc_levels.begin(), spc_levels.end());
  s.spc_levels = std::move(spc_levels);
  s.source = std::make_shared<NodeSpec>(std::move(source));
  return s;
}

NodeSpec make_sr0rep(int p, int q, std::vector<int> rep_levels, NodeSpec source,
                     std::size_t leaf_begin) {
  NodeSpec s = make_basic(NodeKind::Sr0Rep, p, leaf_begin);
  s.q = q;
  std::sort(rep_levels.begin(), rep_levels.end());
  s.rep_levels = std::move(rep_levels);
  s.source = std::make_shared<NodeSpec>(std::move(source));
  return s;
}

void build_flip_tables(NodeSpec& spec) {
  if (spec.source) build_flip_tables(*spec.source);
  if (spec.sub_plan)
    for (auto& e : spec.sub_plan->entries) build_flip_tables(e);
  if (spec.kind != NodeKind::Sr1Spc) return;
  const int d = spec.level - spec.q;
  const int n_spc = static_cast<int>(spec.spc_levels.size());
  spec.flip_by_mask.assign(std::size_t{1} << n_spc, {});
  for (int mask = 1; mask < (1 << n_spc); ++mask) {
    GammaSpc gamma;
    gamma.values.assign(d, -1);
    for (int j = 0; j < n_spc; ++j) {
      const int t = spec.spc_levels[j] - spec.q + 1;
      gamma.values[t - 1] = (mask >> j) & 1;
    }
    spec.flip_by_mask[mask] = gen_sr1spc(gamma).coords;
  }
}

namespace {

using Slice = std::span<const std::uint8_t>;

bool all_of_value(Slice s, std::uint8_t v) {
  return std::all_of(s.begin(), s.end(), [v](std::uint8_t b) { return b == v; });
}
bool is_rep(Slice s) {
  return s.size() >= 2 && s.back() == 1 && all_of_value(s.first(s.size() - 1), 0);
}
bool is_spc(Slice s) {
  return s.size() >= 2 && s.front() == 0 && all_of_value(s.subspan(1), 1);
}

struct Matcher;
int build_tree(DecodePlan& plan, const Matcher& m, int level, std::size_t leaf);

struct Matcher {
  const PolarCode& code;
  FeatureSet features;
  ClassifierOptions opts;

  Slice slice(std::size_t leaf, int level) const {
    return Slice(code.indicator).subspan(leaf, std::size_t{1} << level);
  }

  static int level_for_len(int len) {
    int s = 0;
    while ((1 << s) < len) ++s;
    return s;
  }

  // Full classification of the subtree at (level, leaf): a special pattern if
  // one matches, Generic otherwise.  Used for plan entries (which descend
  // instead of going Generic) and for sequence-node sources (which do not).
  std::optional<NodeSpec> match(int level, std::size_t leaf) const {
    const Slice s = slice(leaf, level);
    const int len = static_cast<int>(s.size());
    if (level == 0)
      return make_basic(s[0] ? NodeKind::Rate1 : NodeKind::Rate0, 0, leaf);
    if (features == FeatureSet::PlainSc) return std::nullopt;
    if (all_of_value(s, 0)) return make_basic(NodeKind::Rate0, level, leaf);
    if (all_of_value(s, 1)) return make_basic(NodeKind::Rate1, level, leaf);
    if (len >= opts.min_special_len) {
      if (is_rep(s)) return make_basic(NodeKind::Rep, level, leaf);
      if (is_spc(s)) return make_basic(NodeKind::Spc, level, leaf);
    }
    if (features == FeatureSet::SnFsc && len >= opts.min_seq_len) {
      if (auto m = match_sr1spc(level, leaf)) return m;
      if (auto m = match_sr0rep(level, leaf)) return m;
    }
    return std::nullopt;
  }

  // The source is a full node in its own right: either one of the special
  // patterns, or a Generic carrying a nested pruned plan over its subtree so
  // the structure inside it is still exploited (and costed) recursively.
  NodeSpec classify_source(int level, std::size_t leaf) const {
    if (auto m = match(level, leaf)) return std::move(*m);
    NodeSpec g = make_basic(NodeKind::Generic, level, leaf);
    g.sub_plan = std::make_shared<DecodePlan>();
    g.sub_plan->features = features;
    g.sub_plan->options = opts;
    build_tree(*g.sub_plan, *this, level, leaf);
    return g;
  }

  // Walk the leftmost chain: at each level r the right sibling of the chain
  // node must be Rate-1 or an SPC of at least min_spc_sibling_len leaves.
  std::optional<NodeSpec> match_sr1spc(int p, std::size_t leaf) const {
    std::vector<int> spc_levels;
    int r = p - 1;
    for (; r >= level_for_len(opts.min_sr1_source_len); --r) {
      const Slice sib = slice(leaf + (std::size_t{1} << r), r);
      if (all_of_value(sib, 1)) continue;
      if ((1 << r) >= opts.min_spc_sibling_len && is_spc(sib)) {
        spc_levels.push_back(r);
        continue;
      }
      break;
    }
    const int q = r + 1;
    if (q > p - 1) return std::nullopt;
    std::reverse(spc_levels.begin(), spc_levels.end());
    return make_sr1spc(p, q, std::move(spc_levels), classify_source(q, leaf), leaf);
  }

  // Mirror image: walk the rightmost chain; left siblings must be Rate-0 or
  // REP of at least min_rep_sibling_len leaves.  Source is the rightmost
  // subtree at level q.
  std::optional<NodeSpec> match_sr0rep(int p, std::size_t leaf) const {
    const std::size_t end = leaf + (std::size_t{1} << p);
    std::vector<int> rep_levels;
    int r = p - 1;
    for (; r >= level_for_len(opts.min_sr0_source_len); --r) {
      const Slice sib = slice(end - (std::size_t{2} << r), r);
      if (all_of_value(sib, 0)) continue;
      if ((1 << r) >= opts.min_rep_sibling_len && is_rep(sib)) {
        rep_levels.push_back(r);
        continue;
      }
      break;
    }
    const int q = r + 1;
    if (q > p - 1) return std::nullopt;
    std::reverse(rep_levels.begin(), rep_levels.end());
    return make_sr0rep(p, q, std::move(rep_levels),
                       classify_source(q, end - (std::size_t{1} << q)), leaf);
  }
};

int build_tree(DecodePlan& plan, const Matcher& m, int level, std::size_t leaf) {
  const int self = static_cast<int>(plan.tree.size());
  plan.tree.push_back({level, leaf, -1, -1, -1});
  if (auto spec = m.match(level, leaf)) {
    plan.tree[self].entry = static_cast<int>(plan.entries.size());
    plan.entries.push_back(std::move(*spec));
    return self;
  }
  // level > 0 guaranteed: level 0 always matches
  const int left = build_tree(plan, m, level - 1, leaf);
  const int right = build_tree(plan, m, level - 1, leaf + (std::size_t{1} << (level - 1)));
  plan.tree[self].left = left;
  plan.tree[self].right = right;
  return self;
}

void describe(std::ostringstream& os, const NodeSpec& s, int depth) {
  os << std::string(2 * depth, ' ') << to_string(s.kind) << " len=" << s.length()
     << " leaf=" << s.leaf_begin;
  if (s.kind == NodeKind::Sr1Spc || s.kind == NodeKind::Sr0Rep) {
    os << " p=" << s.level << " q=" << s.q;
    const auto& lv = s.kind == NodeKind::Sr1Spc ? s.spc_levels : s.rep_levels;
    os << (s.kind == NodeKind::Sr1Spc ? " spc_levels={" : " rep_levels={");
    for (std::size_t i = 0; i < lv.size(); ++i) os << (i ? "," : "") << lv[i];
    os << "}";
  }
  if (s.sub_plan) os << " [nested " << s.sub_plan->entries.size() << " entries]";
  os << "\n";
  if (s.source) describe(os, *s.source, depth + 1);
  if (s.sub_plan)
    for (const auto& e : s.sub_plan->entries) describe(os, e, depth + 1);
}

} // namespace

DecodePlan classify(const PolarCode& code, FeatureSet features,
                    const ClassifierOptions& options) {
  DecodePlan plan;
  plan.features = features;
  plan.options = options;
  Matcher m{code, features, options};
  build_tree(plan, m, code.n, 0);
  if (features == FeatureSet::SnFsc)
    for (auto& e : plan.entries) build_flip_tables(e);
  return plan;
}

std::map<int, int> count_sr1spc(const DecodePlan& plan, bool include_nested) {
  std::map<int, int> hist;
  auto visit = [&](auto&& self, const NodeSpec& s) -> void {
    if (s.kind == NodeKind::Sr1Spc && !s.spc_levels.empty()) ++hist[s.length()];
    if (include_nested && s.source) self(self, *s.source);
    if (include_nested && s.sub_plan)
      for (const auto& e : s.sub_plan->entries) self(self, e);
  };
  for (const auto& e : plan.entries) visit(visit, e);
  return hist;
}

std::string plan_to_string(const DecodePlan& plan) {
  std::ostringstream os;
  os << "features=" << to_string(plan.features) << " entries=" << plan.entries.size()
     << "\n";
  for (const auto& e : plan.entries) describe(os, e, 1);
  return os.str();
}

} // namespace polar
