#include "polarsn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polarsn/channel.hpp"
#include "polarsn/fast_decoder.hpp"

namespace polar {

namespace {

// Domain separation between message bits and channel noise sharing one seed.
constexpr std::uint64_t kMessageSeedMix = 0x8e9b7a25c1f39d47ULL;

struct DecoderTally {
  long frames = 0;
  long frame_errors = 0;
  long long bit_errors = 0;
  long long sum_steps = 0;
};

struct ChunkResult {
  std::vector<DecoderTally> per_decoder;
};

} // namespace

Interval wilson_interval(long successes, long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLARSN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<SimResult> run_fer(const PolarCode& code,
                               const std::vector<FeatureSet>& decoders,
                               const SimConfig& cfg) {
  if (decoders.empty()) throw std::invalid_argument("run_fer: no decoders");
  if (cfg.max_frames <= 0) throw std::invalid_argument("run_fer: max_frames <= 0");
  if (cfg.chunk_frames <= 0) throw std::invalid_argument("run_fer: chunk_frames <= 0");

  const std::size_t D = decoders.size();
  std::vector<DecodePlan> plans;
  plans.reserve(D);
  for (FeatureSet fs : decoders) plans.push_back(classify(code, fs));

  const long n_chunks = (cfg.max_frames + cfg.chunk_frames - 1) / cfg.chunk_frames;
  std::vector<ChunkResult> chunks(static_cast<std::size_t>(n_chunks));
  std::vector<char> done(static_cast<std::size_t>(n_chunks), 0);

  std::mutex mu;
  long next_chunk = 0;   // guarded by mu
  long frontier = 0;     // guarded by mu: chunks [0, frontier) folded into totals
  bool finalized = false;
  std::vector<DecoderTally> totals(D);
  std::vector<DecoderTally> final_totals(D);

  const ChannelConfig ch_cfg{cfg.ebn0_db, code.rate(), cfg.seed};
  const std::uint64_t msg_seed = cfg.seed ^ kMessageSeedMix;
  const std::size_t K = code.info_set.size();

  auto stop_rule = [&](const std::vector<DecoderTally>& t) {
    if (cfg.min_frame_errors <= 0) return false;
    for (const auto& d : t)
      if (d.frame_errors < cfg.min_frame_errors) return false;
    return true;
  };

  auto worker = [&]() {
    std::vector<FastDecoder> decs;
    decs.reserve(D);
    for (std::size_t d = 0; d < D; ++d) decs.emplace_back(code, plans[d]);
    std::vector<std::uint8_t> msg(K);
    for (;;) {
      long chunk_idx;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (finalized || next_chunk >= n_chunks) return;
        chunk_idx = next_chunk++;
      }
      const long frame_lo = chunk_idx * cfg.chunk_frames;
      const long frame_hi = std::min(frame_lo + cfg.chunk_frames, cfg.max_frames);
      ChunkResult cr;
      cr.per_decoder.assign(D, {});
      for (long t = frame_lo; t < frame_hi; ++t) {
        FrameRng mrng(msg_seed, static_cast<std::uint64_t>(t));
        for (std::size_t i = 0; i < K; ++i) msg[i] = mrng.next_bit();
        const auto cw = encode(code, msg);
        const auto llr = transmit(cw, ch_cfg, static_cast<std::uint64_t>(t));
        for (std::size_t d = 0; d < D; ++d) {
          const auto est = decs[d].decode(llr);
          long long berr = 0;
          for (std::size_t i = 0; i < K; ++i) berr += est[i] != msg[i];
          auto& tal = cr.per_decoder[d];
          tal.frames += 1;
          tal.frame_errors += berr != 0;
          tal.bit_errors += berr;
          tal.sum_steps += decs[d].last_steps();
        }
      }
      {
        std::lock_guard<std::mutex> lk(mu);
        chunks[static_cast<std::size_t>(chunk_idx)] = std::move(cr);
        done[static_cast<std::size_t>(chunk_idx)] = 1;
        while (frontier < n_chunks && done[static_cast<std::size_t>(frontier)]) {
          const auto& fc = chunks[static_cast<std::size_t>(frontier)];
          for (std::size_t d = 0; d < D; ++d) {
            totals[d].frames += fc.per_decoder[d].frames;
            totals[d].frame_errors += fc.per_decoder[d].frame_errors;
            totals[d].bit_errors += fc.per_decoder[d].bit_errors;
            totals[d].sum_steps += fc.per_decoder[d].sum_steps;
          }
          ++frontier;
          if (!finalized && stop_rule(totals)) {
            finalized = true;
            final_totals = totals;
          }
        }
      }
    }
  };

  const int n_threads = std::min<long>(resolve_threads(cfg.threads), n_chunks);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!finalized) final_totals = totals;

  std::vector<SimResult> out(D);
  for (std::size_t d = 0; d < D; ++d) {
    out[d].decoder = decoders[d];
    out[d].frames = final_totals[d].frames;
    out[d].frame_errors = final_totals[d].frame_errors;
    out[d].bit_errors = final_totals[d].bit_errors;
    out[d].sum_steps = final_totals[d].sum_steps;
    const LatencyBounds b = code_bounds(plans[d]);
    out[d].lb = b.lb;
    out[d].ub = b.ub;
  }
  return out;
}

std::string csv_header() {
  return "decoder,n,k,construction,ebn0_db,frames,frame_errors,fer,fer_ci_lo,"
         "fer_ci_hi,mean_steps,lb,ub";
}

std::string csv_row(const PolarCode& code, double ebn0_db, const SimResult& r) {
  const Interval ci = wilson_interval(r.frame_errors, r.frames);
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%s,%g,%ld,%ld,%.8g,%.8g,%.8g,%.6f,%ld,%ld",
                to_string(r.decoder), std::size_t{1} << code.n, code.info_set.size(),
                code.construction == Construction::FiveG ? "5g" : "ga", ebn0_db,
                r.frames, r.frame_errors, r.fer(), ci.lo, ci.hi, r.mean_steps(), r.lb,
                r.ub);
  return std::string(buf);
}

} // namespace polar
