#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "polarsn/channel.hpp"
#include "polarsn/constraints.hpp"
#include "polarsn/polar_code.hpp"
#include "polarsn/sc_decoder.hpp"
#include "polarsn/seq_decoders.hpp"

using namespace polar;

namespace {

double corr(const std::vector<std::uint8_t>& x, const std::vector<double>& llr) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); i++) s += x[i] ? -llr[i] : llr[i];
  return s;
}

// all codewords of the subtree given its leaf indicator
std::vector<std::vector<std::uint8_t>> codebook(const std::vector<std::uint8_t>& ind) {
  std::vector<int> info;
  for (std::size_t i = 0; i < ind.size(); i++)
    if (ind[i]) info.push_back((int)i);
  std::vector<std::vector<std::uint8_t>> book;
  for (long m = 0; m < (1L << info.size()); m++) {
    std::vector<std::uint8_t> u(ind.size(), 0);
    for (std::size_t b = 0; b < info.size(); b++) u[info[b]] = (m >> b) & 1;
    polar_transform(u);
    book.push_back(std::move(u));
  }
  return book;
}

std::vector<double> noisy_llr(std::size_t len, std::uint64_t seed, std::uint64_t frame) {
  FrameRng rng(seed, frame);
  std::vector<double> llr(len);
  for (auto& v : llr) v = 1.2 * (rng.next_bit() ? -1.0 : 1.0) + 1.1 * rng.next_normal();
  return llr;
}

} // namespace

TEST_CASE("elementary node decoders are maximum likelihood") {
  CHECK(decode_rate0(8) == std::vector<std::uint8_t>(8, 0));

  for (int t = 0; t < 300; t++) {
    auto llr = noisy_llr(8, 31, t);

    auto r1 = decode_rate1(llr);
    for (int i = 0; i < 8; i++) CHECK(r1[i] == hard_decision(llr[i]));

    auto rep = decode_rep(llr);
    double s = 0;
    for (double v : llr) s += v;
    CHECK(rep == std::vector<std::uint8_t>(8, s < 0 ? 1 : 0));

    for (int check_bit : {0, 1}) {
      auto spc = decode_spc(llr, check_bit);
      int par = 0;
      for (auto b : spc) par ^= b;
      CHECK(par == check_bit);
      // exhaustive reference over the fixed-parity codebook
      double best = -1e300;
      for (int w = 0; w < 256; w++) {
        int p = 0;
        for (int i = 0; i < 8; i++) p ^= (w >> i) & 1;
        if (p != check_bit) continue;
        double c = 0;
        for (int i = 0; i < 8; i++) c += ((w >> i) & 1) ? -llr[i] : llr[i];
        best = std::max(best, c);
      }
      CHECK(corr(spc, llr) == doctest::Approx(best));
    }
  }
}

TEST_CASE("frozen-ancestor chain decode picks the best repetition pattern") {
  // [rate0 8 | rep 4 | rate0 2 | source 2]; the complement pattern is chosen
  // jointly over all repetition masks, so with a rate-1 source the result is
  // exact ML over the subtree and never scores below sequential sc
  auto code = construct_frozen(4, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13});
  ClassifierOptions co;
  auto plan = classify(code, FeatureSet::SnFsc, co);
  REQUIRE(plan.entries.size() == 1);
  const auto& spec = plan.entries[0];
  REQUIRE(spec.kind == NodeKind::Sr0Rep);
  CHECK(spec.q == 1);
  CHECK(spec.rep_levels == std::vector<int>{2});

  auto book = codebook(code.indicator);
  auto in_book = [&](const std::vector<std::uint8_t>& x) {
    for (const auto& cw : book)
      if (cw == x) return true;
    return false;
  };
  for (int t = 0; t < 500; t++) {
    auto llr = noisy_llr(16, 47, t);
    auto fast = decode_sr0rep(llr, spec, code.indicator);
    CHECK(in_book(fast));
    double best = -1e300;
    for (const auto& cw : book) best = std::max(best, corr(cw, llr));
    CHECK(corr(fast, llr) == doctest::Approx(best));
    auto ref = sc_decode_subtree(llr, code.indicator);
    CHECK(corr(fast, llr) >= corr(ref, llr) - 1e-9);
  }
}

TEST_CASE("information-ancestor chain decode is maximum likelihood") {
  // [rep 4 | rate1 4]: five information bits
  auto code = construct_frozen(3, {0, 1, 2});
  auto plan = classify(code, FeatureSet::SnFsc);
  REQUIRE(plan.entries.size() == 1);
  const auto& spec = plan.entries[0];
  REQUIRE(spec.kind == NodeKind::Sr1Spc);
  CHECK(spec.q == 2);
  CHECK(spec.spc_levels.empty());

  auto book = codebook(code.indicator);
  for (int t = 0; t < 500; t++) {
    auto llr = noisy_llr(8, 53, t);
    auto got = decode_sr1(llr, spec, code.indicator);
    auto got2 = decode_node(llr, spec, code.indicator);
    CHECK(got == got2);
    double best = -1e300;
    for (const auto& cw : book) best = std::max(best, corr(cw, llr));
    CHECK(corr(got, llr) == doctest::Approx(best));
  }
}

TEST_CASE("parity-constrained chain decode repairs its checks") {
  // [rep 4 | spc 4]: one segmental check
  auto code = construct_frozen(3, {0, 1, 2, 4});
  auto plan = classify(code, FeatureSet::SnFsc);
  REQUIRE(plan.entries.size() == 1);
  const auto& spec = plan.entries[0];
  REQUIRE(spec.kind == NodeKind::Sr1Spc);
  REQUIRE(spec.spc_levels == std::vector<int>{2});

  auto book = codebook(code.indicator);
  auto in_book = [&](const std::vector<std::uint8_t>& x) {
    for (const auto& cw : book)
      if (cw == x) return true;
    return false;
  };

  for (int t = 0; t < 500; t++) {
    auto llr = noisy_llr(8, 59, t);
    auto got = decode_sr1spc(llr, spec, code.indicator);
    CHECK(in_book(got));
    CHECK(!gamma_spc(got, spec).any_odd());
  }
}

TEST_CASE("flip stage costs two extra steps only when a check is odd") {
  auto code = construct_frozen(3, {0, 1, 2, 4});
  auto plan = classify(code, FeatureSet::SnFsc);
  const auto& spec = plan.entries[0];

  CostRules rules;
  long steps_even = 0, steps_odd = 0;
  SeqDecodeOptions opt;
  opt.rules = &rules;

  std::vector<double> clean(8, 2.0);
  opt.steps = &steps_even;
  decode_sr1spc(clean, spec, code.indicator, opt);

  std::vector<double> dirty(8, 2.0);
  dirty[7] = -2.0; // leaves an odd check after the per-stride pass
  opt.steps = &steps_odd;
  decode_sr1spc(dirty, spec, code.indicator, opt);

  CHECK(steps_odd == steps_even + rules.sr1_flip);
}

TEST_CASE("joint offset search never scores worse than the cheap one") {
  // [rep 4 | spc 4 | spc 8]: two segmental checks
  std::vector<int> frozen = {0, 1, 2, 4, 8};
  auto code = construct_frozen(4, frozen);
  auto plan = classify(code, FeatureSet::SnFsc);
  REQUIRE(plan.entries.size() == 1);
  const auto& spec = plan.entries[0];
  REQUIRE(spec.kind == NodeKind::Sr1Spc);
  REQUIRE(spec.spc_levels.size() == 2);

  auto book = codebook(code.indicator);
  auto in_book = [&](const std::vector<std::uint8_t>& x) {
    for (const auto& cw : book)
      if (cw == x) return true;
    return false;
  };

  SeqDecodeOptions joint, cheap;
  joint.flip_search = FlipSearch::JointOverOffsets;
  cheap.flip_search = FlipSearch::CheapestOffsetPerCoordinate;
  for (int t = 0; t < 500; t++) {
    auto llr = noisy_llr(16, 61, t);
    auto a = decode_sr1spc(llr, spec, code.indicator, joint);
    auto b = decode_sr1spc(llr, spec, code.indicator, cheap);
    CHECK(in_book(a));
    CHECK(in_book(b));
    CHECK(corr(a, llr) >= corr(b, llr) - 1e-9);
  }
}

TEST_CASE("decode_node dispatches generic specs to plain sc") {
  auto code = construct_frozen(4, {0, 1, 2, 3, 4, 6, 8, 9});
  auto spec = make_basic(NodeKind::Generic, 4);
  for (int t = 0; t < 100; t++) {
    auto llr = noisy_llr(16, 67, t);
    CHECK(decode_node(llr, spec, code.indicator) ==
          sc_decode_subtree(llr, code.indicator));
  }
}
