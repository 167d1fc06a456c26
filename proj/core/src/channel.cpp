#include "polarsn/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

} // namespace

// xoshiro256++ seeded via splitmix64 from (seed, frame): cheap to construct
// per frame and identical on every platform.
FrameRng::FrameRng(std::uint64_t seed, std::uint64_t frame_index) {
  std::uint64_t x = seed ^ (frame_index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t FrameRng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double FrameRng::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double FrameRng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double noise_variance(const ChannelConfig& cfg) {
  if (!(cfg.rate > 0.0) || cfg.rate > 1.0)
    throw std::invalid_argument("channel: rate must be in (0, 1]");
  return 1.0 / (2.0 * cfg.rate * std::pow(10.0, cfg.ebn0_db / 10.0));
}

std::vector<double> transmit(std::span<const std::uint8_t> codeword,
                             const ChannelConfig& cfg,
                             std::uint64_t frame_index) {
  const double sigma2 = noise_variance(cfg);
  const double sigma = std::sqrt(sigma2);
  const double scale = 2.0 / sigma2;
  FrameRng rng(cfg.seed, frame_index);
  std::vector<double> llr(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const double s = codeword[i] ? -1.0 : 1.0;
    llr[i] = scale * (s + sigma * rng.next_normal());
  }
  return llr;
}

} // namespace polar
