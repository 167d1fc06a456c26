#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarsn/latency_model.hpp"
#include "polarsn/node_classifier.hpp"
#include "polarsn/polar_code.hpp"

namespace polar {

struct SimConfig {
  double ebn0_db = 0.0;
  std::uint64_t seed = 1;
  long max_frames = 1000000;
  // Early stop once every decoder has at least this many frame errors.
  // <= 0 disables early stopping (always run max_frames).
  long min_frame_errors = 100;
  int threads = 0;        // 0 = auto (POLARSN_THREADS env var, else hardware)
  long chunk_frames = 256; // frames per accounting chunk (stop granularity)
};

struct SimResult {
  FeatureSet decoder = FeatureSet::PlainSc;
  long frames = 0;
  long frame_errors = 0;
  long long bit_errors = 0;
  long long sum_steps = 0;
  long lb = 0;
  long ub = 0;
  double fer() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }
  double mean_steps() const {
    return frames ? static_cast<double>(sum_steps) / frames : 0.0;
  }
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for a binomial proportion (default z: 95% two-sided).
Interval wilson_interval(long successes, long trials, double z = 1.959964);

// Paired Monte-Carlo FER run: every decoder sees the same messages and the
// same noise. Counters are bit-identical for any thread count: frames are
// processed in fixed-size chunks, chunk results are folded in index order, and
// the run finalizes at the first chunk prefix where the stop rule holds.
std::vector<SimResult> run_fer(const PolarCode& code,
                               const std::vector<FeatureSet>& decoders,
                               const SimConfig& cfg);

std::string csv_header();
std::string csv_row(const PolarCode& code, double ebn0_db, const SimResult& r);

// requested > 0 wins; else POLARSN_THREADS if set and positive; else hardware.
int resolve_threads(int requested);

} // namespace polar
