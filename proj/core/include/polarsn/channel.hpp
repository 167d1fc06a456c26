#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polar {

// BPSK over AWGN.  Eb/N0 is interpreted at the given code rate:
// sigma^2 = 1 / (2 * rate * 10^(ebn0_db/10)).
struct ChannelConfig {
  double ebn0_db = 0.0;
  double rate = 0.5;
  std::uint64_t seed = 0;
};

double noise_variance(const ChannelConfig& cfg);

// Map codeword bits to +-1 (0 -> +1), add N(0, sigma^2) noise and return the
// channel LLRs 2y/sigma^2.  The noise stream is a pure function of
// (cfg.seed, frame_index), so frames can be replayed in any order and across
// any number of worker threads.
std::vector<double> transmit(std::span<const std::uint8_t> codeword,
                             const ChannelConfig& cfg,
                             std::uint64_t frame_index = 0);

// Stream of standard normal variates for one (seed, frame) pair; used by the
// channel and by the simulation harness for message bits.
class FrameRng {
 public:
  FrameRng(std::uint64_t seed, std::uint64_t frame_index);
  std::uint64_t next_u64();
  double next_uniform(); // (0, 1]
  double next_normal();  // N(0, 1)
  // one random bit (low entropy use; draws a fresh word each call)
  int next_bit() { return static_cast<int>(next_u64() & 1u); }

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace polar
