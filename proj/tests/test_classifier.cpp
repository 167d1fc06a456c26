#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "polarsn/node_classifier.hpp"
#include "polarsn/polar_code.hpp"

using namespace polar;

namespace {

// Rebuild the leaf indicator a plan entry claims for its span.  Generic spans
// make no pattern claim, so the true indicator is copied for them.
void paint(const NodeSpec& s, std::vector<std::uint8_t>& out, std::size_t base,
           const std::vector<std::uint8_t>& truth) {
  const int len = s.length();
  auto fill = [&](std::size_t b, int l, std::uint8_t v) {
    for (int i = 0; i < l; i++) out[b + i] = v;
  };
  switch (s.kind) {
    case NodeKind::Rate0: fill(base, len, 0); break;
    case NodeKind::Rate1: fill(base, len, 1); break;
    case NodeKind::Rep: fill(base, len, 0); out[base + len - 1] = 1; break;
    case NodeKind::Spc: fill(base, len, 1); out[base] = 0; break;
    case NodeKind::Sr1Spc: {
      // [source | sibling q | sibling q+1 | ... | sibling p-1]
      REQUIRE(s.source != nullptr);
      paint(*s.source, out, base, truth);
      for (int r = s.q; r < s.level; r++) {
        bool spc = std::count(s.spc_levels.begin(), s.spc_levels.end(), r) > 0;
        fill(base + (1 << r), 1 << r, 1);
        if (spc) out[base + (1 << r)] = 0;
      }
      break;
    }
    case NodeKind::Sr0Rep: {
      // [sibling p-1 | ... | sibling q | source]
      REQUIRE(s.source != nullptr);
      for (int r = s.q; r < s.level; r++) {
        bool rep = std::count(s.rep_levels.begin(), s.rep_levels.end(), r) > 0;
        std::size_t b = base + (std::size_t)(1 << s.level) - (std::size_t)(2 << r);
        fill(b, 1 << r, 0);
        if (rep) out[b + (1 << r) - 1] = 1;
      }
      paint(*s.source, out, base + (std::size_t)(1 << s.level) - (std::size_t)(1 << s.q),
            truth);
      break;
    }
    case NodeKind::Generic:
      for (int i = 0; i < len; i++) out[base + i] = truth[base + i];
      break;
  }
}

void check_plan_structure(const PolarCode& code, FeatureSet features) {
  auto plan = classify(code, features);
  // entries tile [0, N) left to right
  std::size_t cursor = 0;
  for (const auto& e : plan.entries) {
    CHECK(e.leaf_begin == cursor);
    cursor += (std::size_t)e.length();
  }
  CHECK(cursor == (std::size_t)code.N);
  // and the claimed patterns reproduce the true indicator
  std::vector<std::uint8_t> painted(code.N, 2);
  for (const auto& e : plan.entries) paint(e, painted, e.leaf_begin, code.indicator);
  CHECK(painted == code.indicator);
}

} // namespace

TEST_CASE("degenerate codes classify to a single entry") {
  auto c0 = construct_frozen(4, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
  auto p0 = classify(c0, FeatureSet::SnFsc);
  REQUIRE(p0.entries.size() == 1);
  CHECK(p0.entries[0].kind == NodeKind::Rate0);
  CHECK(p0.entries[0].level == 4);

  auto c1 = construct_frozen(4, {});
  auto p1 = classify(c1, FeatureSet::SnFsc);
  REQUIRE(p1.entries.size() == 1);
  CHECK(p1.entries[0].kind == NodeKind::Rate1);
}

TEST_CASE("rep and spc leaf patterns") {
  auto cr = construct_frozen(3, {0, 1, 2, 3, 4, 5, 6});
  auto pr = classify(cr, FeatureSet::Fssc);
  REQUIRE(pr.entries.size() == 1);
  CHECK(pr.entries[0].kind == NodeKind::Rep);

  auto cs = construct_frozen(3, {0});
  auto ps = classify(cs, FeatureSet::Fssc);
  REQUIRE(ps.entries.size() == 1);
  CHECK(ps.entries[0].kind == NodeKind::Spc);
}

TEST_CASE("feature sets limit the node kinds used") {
  auto code = construct(9, 256, Construction::FiveG);
  auto fssc = classify(code, FeatureSet::Fssc);
  for (const auto& e : fssc.entries) {
    bool basic = e.kind == NodeKind::Rate0 || e.kind == NodeKind::Rate1 ||
                 e.kind == NodeKind::Rep || e.kind == NodeKind::Spc;
    CHECK(basic);
  }
  auto plain = classify(code, FeatureSet::PlainSc);
  std::size_t cursor = 0;
  for (const auto& e : plain.entries) {
    CHECK(e.leaf_begin == cursor);
    cursor += (std::size_t)e.length();
  }
  CHECK(cursor == (std::size_t)code.N);
}

TEST_CASE("plan entries tile the leaves and reproduce the indicator") {
  const int rates[5][2] = {{1, 6}, {1, 3}, {1, 2}, {2, 3}, {5, 6}};
  for (int n : {7, 9, 10})
    for (auto& r : rates) {
      int K = (int)std::floor((double)(1 << n) * r[0] / r[1]);
      auto code = construct(n, K, Construction::FiveG);
      check_plan_structure(code, FeatureSet::Fssc);
      check_plan_structure(code, FeatureSet::SnFsc);
    }
  check_plan_structure(construct(10, 512, Construction::GaussianApprox, 2.0),
                       FeatureSet::SnFsc);
}

TEST_CASE("sequence entries carry a consistent chain description") {
  auto code = construct(10, 682, Construction::FiveG);
  auto plan = classify(code, FeatureSet::SnFsc);
  int seq_nodes = 0;
  for (const auto& e : plan.entries) {
    if (e.kind == NodeKind::Sr1Spc) {
      seq_nodes++;
      REQUIRE(e.source != nullptr);
      CHECK(e.q >= 0);
      CHECK(e.q < e.level);
      CHECK(e.source->level == e.q);
      for (int r : e.spc_levels) {
        CHECK(r >= e.q);
        CHECK(r < e.level);
      }
      CHECK(std::is_sorted(e.spc_levels.begin(), e.spc_levels.end()));
      // flip tables indexed by the odd/even mask over the spc levels
      CHECK(e.flip_by_mask.size() == (std::size_t)1 << e.spc_levels.size());
      if (!e.flip_by_mask.empty()) CHECK(e.flip_by_mask[0].empty());
    }
    if (e.kind == NodeKind::Sr0Rep) {
      seq_nodes++;
      REQUIRE(e.source != nullptr);
      CHECK(e.source->level == e.q);
      for (int r : e.rep_levels) {
        CHECK(r >= e.q);
        CHECK(r < e.level);
      }
    }
  }
  CHECK(seq_nodes > 0);
}

TEST_CASE("parity-constrained sequence node tallies for two known codes") {
  auto hist_of = [](const PolarCode& code) {
    auto plan = classify(code, FeatureSet::SnFsc);
    std::map<int, int> h;
    for (const auto& e : plan.entries)
      if (e.kind == NodeKind::Sr1Spc && !e.spc_levels.empty()) h[e.length()]++;
    return h;
  };
  std::map<int, int> w128 = {{16, 2}};
  CHECK(hist_of(construct(7, 64, Construction::FiveG)) == w128);
  std::map<int, int> w1024 = {{16, 3}, {32, 1}, {64, 1}, {128, 2}, {256, 1}};
  CHECK(hist_of(construct(10, 682, Construction::FiveG)) == w1024);
}

TEST_CASE("count_sr1spc can include nested sources") {
  auto code = construct(10, 512, Construction::FiveG);
  auto plan = classify(code, FeatureSet::SnFsc);
  auto flat = count_sr1spc(plan, false);
  auto deep = count_sr1spc(plan, true);
  long nf = 0, nd = 0;
  for (auto& kv : flat) nf += kv.second;
  for (auto& kv : deep) nd += kv.second;
  CHECK(nd >= nf);
}

TEST_CASE("options bound the smallest special entry") {
  auto code = construct(8, 128, Construction::FiveG);
  ClassifierOptions wide;
  wide.min_special_len = 8;
  auto plan = classify(code, FeatureSet::Fssc, wide);
  for (const auto& e : plan.entries)
    if (e.kind == NodeKind::Rep || e.kind == NodeKind::Spc) CHECK(e.length() >= 8);
}
