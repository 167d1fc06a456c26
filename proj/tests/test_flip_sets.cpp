#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "polarsn/flip_sets.hpp"

using namespace polar;

namespace {

GammaSpc make_gamma(std::vector<int> v) {
  GammaSpc g;
  for (int x : v) g.values.push_back((std::int8_t)x);
  return g;
}

std::vector<FlipCoordinate> sorted(std::vector<FlipCoordinate> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<FlipCoordinate> pairs(std::vector<std::pair<int, int>> ks) {
  std::vector<FlipCoordinate> v;
  for (auto [a, b] : ks) v.push_back({a, b, 0});
  return sorted(v);
}

} // namespace

TEST_CASE("single odd check pairs the two segments") {
  auto fs = gen_sspc(make_gamma({1}));
  CHECK(sorted(fs.coords) == pairs({{1, 2}}));
}

TEST_CASE("all-even gamma yields no correction") {
  CHECK(gen_sspc(make_gamma({0})).coords.empty());
  CHECK(gen_sspc(make_gamma({0, 0, 0})).coords.empty());
  CHECK(gen_sr1spc(make_gamma({0, -1, 0})).coords.empty());
  CHECK(feasible_oracle(make_gamma({-1, -1})).empty());
}

TEST_CASE("known three-level patterns") {
  // full feasible sets for the two classic order-3 parity patterns
  auto a = sorted(gen_sspc(make_gamma({0, 1, 0})).coords);
  CHECK(a == pairs({{1, 3}, {2, 4}, {5, 7}, {6, 8}}));
  auto b = sorted(gen_sspc(make_gamma({0, 1, 1})).coords);
  CHECK(b == pairs({{1, 7}, {2, 8}, {3, 5}, {4, 6}}));
  // the worked split of the order-2 coordinate (1,3): appending a third even
  // check keeps (1,3)/(5,7), an odd one shifts to (3,5)/(1,7)
  auto has = [](const std::vector<FlipCoordinate>& v, FlipCoordinate c) {
    return std::find(v.begin(), v.end(), c) != v.end();
  };
  CHECK(has(a, {1, 3, 0}));
  CHECK(has(a, {5, 7, 0}));
  CHECK(has(b, {3, 5, 0}));
  CHECK(has(b, {1, 7, 0}));
}

TEST_CASE("a sentinel level widens the split four ways") {
  auto got = sorted(gen_sr1spc(make_gamma({1, -1})).coords);
  CHECK(got.size() == 4);
  CHECK(got == sorted(feasible_oracle(make_gamma({1, -1}))));
}

TEST_CASE("generators agree with the brute-force oracle up to six levels") {
  // enumerate every gamma over {0, 1, -1}
  for (int m = 1; m <= 6; m++) {
    long total = 1;
    for (int i = 0; i < m; i++) total *= 3;
    for (long pat = 0; pat < total; pat++) {
      GammaSpc g;
      long x = pat;
      bool sentinel = false;
      for (int i = 0; i < m; i++) {
        int v = (int)(x % 3);
        x /= 3;
        if (v == 2) {
          v = -1;
          sentinel = true;
        }
        g.values.push_back((std::int8_t)v);
      }
      auto want = sorted(feasible_oracle(g));
      auto got = sorted(gen_sr1spc(g).coords);
      REQUIRE_MESSAGE(got == want, "gamma pattern ", pat, " order ", m);
      if (!sentinel) {
        auto plain = sorted(gen_sspc(g).coords);
        REQUIRE_MESSAGE(plain == want, "sentinel-free gamma pattern ", pat, " order ", m);
      }
    }
  }
}

TEST_CASE("every generated coordinate really repairs the checks") {
  // flipping one bit in segments k1 and k2 must toggle exactly the odd checks
  auto toggles = [](const FlipCoordinate& c, int t) {
    return segment_involved(t, c.k1) != segment_involved(t, c.k2);
  };
  for (auto v : {std::vector<int>{1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1, 0}}) {
    auto g = make_gamma(v);
    for (const auto& c : gen_sspc(g).coords)
      for (int t = 1; t <= g.order(); t++) CHECK(toggles(c, t) == (g.values[t - 1] == 1));
  }
}

TEST_CASE("coordinates are normalized") {
  for (auto v : {std::vector<int>{1, 1, 1}, {1, -1, 1}, {0, 1, -1, 1}}) {
    auto fs = gen_sr1spc(make_gamma(v));
    for (const auto& c : fs.coords) {
      CHECK(c.k1 < c.k2);
      CHECK(c.k1 >= 1);
      CHECK(c.k2 <= 1 << v.size());
      CHECK(c.m == 0);
    }
    auto s = sorted(fs.coords);
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end()); // no duplicates
  }
}
