#include <benchmark/benchmark.h>

#include <vector>

#include "polarsn/channel.hpp"
#include "polarsn/fast_decoder.hpp"
#include "polarsn/harness.hpp"
#include "polarsn/sc_decoder.hpp"

using namespace polar;

namespace {

struct Fixture {
  PolarCode code;
  std::vector<std::vector<double>> llr;

  explicit Fixture(int n)
      : code(n <= 10 ? construct(n, (1 << n) / 2, Construction::FiveG)
                     : construct(n, (1 << n) / 2, Construction::GaussianApprox, 2.0)) {
    ChannelConfig cfg{2.0, code.rate(), 42};
    std::vector<std::uint8_t> msg(code.K, 0);
    FrameRng rng(42, 0);
    for (auto& b : msg) b = (std::uint8_t)rng.next_bit();
    auto cw = encode(code, msg);
    for (int f = 0; f < 64; f++) llr.push_back(transmit(cw, cfg, f));
  }
};

Fixture& fixture(int n) {
  static std::vector<Fixture> cache = [] {
    std::vector<Fixture> v;
    for (int n = 7; n <= 12; n++) v.emplace_back(n);
    return v;
  }();
  return cache[n - 7];
}

void BM_Encode(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  std::vector<std::uint8_t> msg(fx.code.K, 1);
  for (auto _ : state) benchmark::DoNotOptimize(encode(fx.code, msg));
  state.SetItemsProcessed(state.iterations());
}

void BM_Transmit(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  ChannelConfig cfg{2.0, fx.code.rate(), 7};
  std::vector<std::uint8_t> cw(fx.code.N, 0);
  std::uint64_t f = 0;
  for (auto _ : state) benchmark::DoNotOptimize(transmit(cw, cfg, f++));
  state.SetItemsProcessed(state.iterations());
}

void BM_Classify(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(fx.code, FeatureSet::SnFsc));
}

void BM_ScDecode(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  ScDecoder dec(fx.code);
  std::size_t f = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dec.decode(fx.llr[f++ & 63]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_FastDecode(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  auto features = state.range(1) ? FeatureSet::SnFsc : FeatureSet::Fssc;
  auto plan = classify(fx.code, features);
  FastDecoder dec(fx.code, plan);
  std::size_t f = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dec.decode(fx.llr[f++ & 63]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_FerPoint(benchmark::State& state) {
  auto& fx = fixture((int)state.range(0));
  SimConfig cfg;
  cfg.ebn0_db = 2.0;
  cfg.max_frames = 2048;
  cfg.min_frame_errors = 0;
  cfg.threads = (int)state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_fer(fx.code, {FeatureSet::SnFsc}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.max_frames);
}

} // namespace

BENCHMARK(BM_Encode)->DenseRange(7, 12, 1);
BENCHMARK(BM_Transmit)->DenseRange(7, 12, 1);
BENCHMARK(BM_Classify)->DenseRange(7, 12, 1);
BENCHMARK(BM_ScDecode)->DenseRange(7, 12, 1);
BENCHMARK(BM_FastDecode)->ArgsProduct({{7, 8, 9, 10, 11, 12}, {0, 1}});
BENCHMARK(BM_FerPoint)->Args({10, 1})->Args({10, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
