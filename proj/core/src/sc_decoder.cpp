#include "polarsn/sc_decoder.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

double f_op(double a, double b) {
  const double mag = std::min(std::fabs(a), std::fabs(b));
  return ((a < 0.0) != (b < 0.0)) ? -mag : mag;
}

double g_op(double a, double b, std::uint8_t left_bit) {
  return left_bit ? b - a : b + a;
}

void combine(std::span<const std::uint8_t> left, std::span<const std::uint8_t> right,
             std::span<std::uint8_t> out) {
  const std::size_t h = left.size();
  if (right.size() != h || out.size() != 2 * h)
    throw std::invalid_argument("combine: size mismatch");
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = left[i] ^ right[i];
    out[h + i] = right[i];
  }
}

namespace {

// Shared traversal engine: iterative post-order walk with one alpha buffer and
// two beta scratch buffers per level.  `indicator` covers the subtree leaves.
struct Workspace {
  std::vector<std::vector<double>>& alpha;
  std::vector<std::vector<std::uint8_t>>& beta;
  std::vector<std::vector<std::uint8_t>>& beta_left;
};

void run_tree(int levels, std::span<const std::uint8_t> indicator, Workspace ws) {
  struct Frame {
    int level;
    std::size_t leaf;  // first leaf covered by this node
    int stage;         // 0 = enter, 1 = after left, 2 = after right
  };
  std::vector<Frame> stack;
  stack.reserve(2 * levels + 2);
  stack.push_back({levels, 0, 0});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const int p = fr.level;
    if (p == 0) {
      ws.beta[0][0] = indicator[fr.leaf] ? hard_decision(ws.alpha[0][0]) : 0;
      stack.pop_back();
      continue;
    }
    const std::size_t half = std::size_t{1} << (p - 1);
    auto& a = ws.alpha[p];
    auto& ac = ws.alpha[p - 1];
    switch (fr.stage) {
      case 0:
        for (std::size_t i = 0; i < half; ++i) ac[i] = f_op(a[i], a[i + half]);
        fr.stage = 1;
        stack.push_back({p - 1, fr.leaf, 0});
        break;
      case 1:
        ws.beta_left[p - 1] = ws.beta[p - 1];
        for (std::size_t i = 0; i < half; ++i)
          ac[i] = g_op(a[i], a[i + half], ws.beta_left[p - 1][i]);
        fr.stage = 2;
        stack.push_back({p - 1, fr.leaf + half, 0});
        break;
      case 2:
        combine(ws.beta_left[p - 1], ws.beta[p - 1], ws.beta[p]);
        stack.pop_back();
        break;
    }
  }
}

} // namespace

ScDecoder::ScDecoder(const PolarCode& code) : code_(code) {
  alpha_.resize(code.n + 1);
  beta_.resize(code.n + 1);
  beta_left_.resize(code.n + 1);
  for (int p = 0; p <= code.n; ++p) {
    alpha_[p].resize(std::size_t{1} << p);
    beta_[p].resize(std::size_t{1} << p);
    beta_left_[p].resize(std::size_t{1} << p);
  }
}

ScResult ScDecoder::decode(std::span<const double> channel_llr) {
  if (static_cast<int>(channel_llr.size()) != code_.N)
    throw std::invalid_argument("sc_decode: llr length != N");
  alpha_[code_.n].assign(channel_llr.begin(), channel_llr.end());
  run_tree(code_.n, code_.indicator, {alpha_, beta_, beta_left_});

  ScResult res;
  res.codeword = beta_[code_.n];
  // recover u from the codeword: the transform is involutive
  std::vector<std::uint8_t> u = res.codeword;
  polar_transform(u);
  res.message.resize(code_.K);
  for (int k = 0; k < code_.K; ++k) res.message[k] = u[code_.info_set[k]];
  return res;
}

ScResult sc_decode(const PolarCode& code, std::span<const double> channel_llr) {
  ScDecoder dec(code);
  return dec.decode(channel_llr);
}

std::vector<std::uint8_t> sc_decode_subtree(std::span<const double> llr,
                                            std::span<const std::uint8_t> indicator) {
  const std::size_t len = llr.size();
  if (len == 0 || (len & (len - 1)) != 0 || indicator.size() != len)
    throw std::invalid_argument("sc_decode_subtree: bad sizes");
  int levels = 0;
  while ((std::size_t{1} << levels) < len) ++levels;

  std::vector<std::vector<double>> alpha(levels + 1);
  std::vector<std::vector<std::uint8_t>> beta(levels + 1), beta_left(levels + 1);
  for (int p = 0; p <= levels; ++p) {
    alpha[p].resize(std::size_t{1} << p);
    beta[p].resize(std::size_t{1} << p);
    beta_left[p].resize(std::size_t{1} << p);
  }
  alpha[levels].assign(llr.begin(), llr.end());
  run_tree(levels, indicator, {alpha, beta, beta_left});
  return beta[levels];
}

} // namespace polar
