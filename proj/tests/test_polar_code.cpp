#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "polarsn/channel.hpp"
#include "polarsn/nr_sequence.hpp"
#include "polarsn/polar_code.hpp"

using namespace polar;

TEST_CASE("universal sequence is a permutation with the 3GPP head") {
  auto W = nr_universal_sequence();
  REQUIRE(W.size() == 1024);
  std::set<int> seen(W.begin(), W.end());
  CHECK(seen.size() == 1024);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 1023);
  // TS 38.212 Table 5.3.1.2-1, W(0)..W(30)
  const int head[] = {0, 1, 2, 4, 8, 16, 32, 3, 5, 64, 9,  6,   17, 10, 18, 128,
                      12, 33, 65, 20, 256, 34, 24, 36, 7, 129, 66, 512, 11, 40, 68};
  for (int i = 0; i < 31; i++) CHECK(W[i] == head[i]);
  CHECK(W[1023] == 1023);
}

TEST_CASE("short reliability sequences keep relative order") {
  auto s3 = nr_reliability_sequence(3);
  const std::vector<int> want = {0, 1, 2, 4, 3, 5, 6, 7};
  CHECK(s3 == want);
  // nested: every prefix of the filtered order is itself the lower-n filter
  auto s5 = nr_reliability_sequence(5);
  std::vector<int> filt;
  for (int v : s5)
    if (v < 8) filt.push_back(v);
  CHECK(filt == want);
}

TEST_CASE("construct basic invariants") {
  for (int K : {21, 64, 106}) {
    auto c = construct(7, K, Construction::FiveG);
    CHECK(c.N == 128);
    CHECK(c.K == K);
    CHECK((int)c.info_set.size() == K);
    CHECK(std::is_sorted(c.info_set.begin(), c.info_set.end()));
    int ones = 0;
    for (auto b : c.indicator) ones += b;
    CHECK(ones == K);
    for (int i : c.info_set) CHECK(c.indicator[i] == 1);
  }
  CHECK_THROWS_AS(construct(7, 129, Construction::FiveG), std::invalid_argument);
  CHECK_THROWS_AS(construct(-1, 0, Construction::FiveG), std::invalid_argument);
  CHECK_THROWS_AS(construct(11, 4, Construction::FiveG), std::invalid_argument);
}

TEST_CASE("5G information sets are nested in K") {
  auto a = construct(7, 32, Construction::FiveG);
  auto b = construct(7, 64, Construction::FiveG);
  auto c = construct(7, 96, Construction::FiveG);
  for (int i : a.info_set) CHECK(b.indicator[i] == 1);
  for (int i : b.info_set) CHECK(c.indicator[i] == 1);
}

TEST_CASE("constructions respect the binary domination order") {
  // if leaf i is information and j covers i bitwise, j must be information too
  for (auto method : {Construction::FiveG, Construction::GaussianApprox}) {
    auto c = construct(10, 512, method, 2.0);
    for (int i : c.info_set)
      for (int b = 0; b < 10; b++) {
        int j = i | (1 << b);
        if (j != i) CHECK(c.indicator[j] == 1);
      }
  }
}

TEST_CASE("gaussian approximation reliabilities") {
  auto mu = ga_reliability(8, 1.0, 0.5);
  REQUIRE(mu.size() == 256);
  // extremes saturate numerically: hopeless channels go to 0, near-perfect
  // ones past the inversion range; both ends are far from the K boundary
  for (double v : mu) CHECK(v >= 0.0);
  auto lo = std::min_element(mu.begin(), mu.end()) - mu.begin();
  CHECK(lo == 0);
  // all-g leaf doubles the mean n times, exactly
  CHECK(mu[255] == doctest::Approx(256.0 * 4.0 * 0.5 * std::pow(10.0, 0.1)));
}

TEST_CASE("polar transform is an involution") {
  FrameRng rng(3, 0);
  for (int t = 0; t < 10; t++) {
    std::vector<std::uint8_t> x(64);
    for (auto& b : x) b = (std::uint8_t)rng.next_bit();
    auto y = x;
    polar_transform(y);
    polar_transform(y);
    CHECK(y == x);
  }
}

TEST_CASE("encode equals multiplication by the Kronecker-power matrix") {
  const int n = 5, N = 32;
  // G = F^{kron n}, F = [[1,0],[1,1]], natural bit order
  std::vector<std::vector<std::uint8_t>> G(N, std::vector<std::uint8_t>(N, 0));
  G[0][0] = 1;
  for (int sz = 1; sz < N; sz *= 2)
    for (int r = 0; r < sz; r++)
      for (int c = 0; c < sz; c++) {
        G[r + sz][c] = G[r][c];
        G[r + sz][c + sz] = G[r][c];
      }
  auto code = construct(n, 20, Construction::FiveG);
  FrameRng rng(5, 1);
  for (int t = 0; t < 20; t++) {
    std::vector<std::uint8_t> msg(code.K);
    for (auto& b : msg) b = (std::uint8_t)rng.next_bit();
    auto x = encode(code, msg);
    std::vector<std::uint8_t> u(N, 0);
    for (int i = 0; i < code.K; i++) u[code.info_set[i]] = msg[i];
    for (int j = 0; j < N; j++) {
      std::uint8_t acc = 0;
      for (int i = 0; i < N; i++) acc ^= (std::uint8_t)(u[i] & G[i][j]);
      CHECK(x[j] == acc);
    }
  }
}

TEST_CASE("encode is linear") {
  auto code = construct(6, 30, Construction::FiveG);
  FrameRng rng(9, 2);
  std::vector<std::uint8_t> a(code.K), b(code.K), s(code.K);
  for (int i = 0; i < code.K; i++) {
    a[i] = (std::uint8_t)rng.next_bit();
    b[i] = (std::uint8_t)rng.next_bit();
    s[i] = (std::uint8_t)(a[i] ^ b[i]);
  }
  auto xa = encode(code, a), xb = encode(code, b), xs = encode(code, s);
  for (int j = 0; j < code.N; j++) CHECK(xs[j] == (xa[j] ^ xb[j]));
}

TEST_CASE("construct_frozen and descriptor round trip") {
  std::vector<int> frozen = {0, 1, 2, 4, 8, 3};
  auto c = construct_frozen(4, frozen);
  CHECK(c.N == 16);
  CHECK(c.K == 10);
  for (int f : frozen) CHECK(c.indicator[f] == 0);

  auto text = descriptor_to_string(c, frozen);
  std::istringstream in(text);
  auto c2 = parse_descriptor(in);
  CHECK(c2.n == c.n);
  CHECK(c2.K == c.K);
  CHECK(c2.info_set == c.info_set);

  auto c3 = construct(9, 256, Construction::GaussianApprox, 1.5);
  std::istringstream in3(descriptor_to_string(c3));
  auto c4 = parse_descriptor(in3);
  CHECK(c4.info_set == c3.info_set);
  CHECK(c4.construction == Construction::GaussianApprox);
  CHECK(c4.design_snr_db == doctest::Approx(1.5));
}
