#include "polarsn/fast_decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "polarsn/sc_decoder.hpp"

namespace polar {

FastDecoder::FastDecoder(const PolarCode& code, const DecodePlan& plan,
                         FlipSearch flip_search, CostRules rules)
    : code_(&code), plan_(plan), flip_search_(flip_search), rules_(rules) {
  if (plan.tree.empty()) throw std::invalid_argument("FastDecoder: empty plan");
  if (plan.tree.front().level != code.n)
    throw std::invalid_argument("FastDecoder: plan/code size mismatch");
  alpha_.resize(code.n + 1);
  beta_.resize(code.n + 1);
  for (int d = 0; d <= code.n; ++d) {
    alpha_[d].resize(std::size_t{1} << (code.n - d));
    beta_[d].resize(std::size_t{1} << (code.n - d));
  }
}

void FastDecoder::run(int node_idx, int depth) {
  const PlanNode& node = plan_.tree[static_cast<std::size_t>(node_idx)];
  const std::size_t len = std::size_t{1} << node.level;
  auto& a = alpha_[depth];
  auto& b = beta_[depth];
  if (node.entry >= 0) {
    const NodeSpec& spec = plan_.entries[static_cast<std::size_t>(node.entry)];
    std::span<const std::uint8_t> ind(code_->indicator.data() + node.leaf_begin, len);
    SeqDecodeOptions opt;
    opt.flip_search = flip_search_;
    opt.rules = &rules_;
    opt.steps = &last_steps_;
    auto bits = decode_node(std::span<const double>(a.data(), len), spec, ind, opt);
    std::copy(bits.begin(), bits.end(), b.begin());
    return;
  }
  const std::size_t half = len / 2;
  auto& ac = alpha_[depth + 1];
  auto& bc = beta_[depth + 1];
  for (std::size_t i = 0; i < half; ++i) ac[i] = f_op(a[i], a[i + half]);
  run(node.left, depth + 1);
  std::vector<std::uint8_t> left_bits(bc.begin(), bc.begin() + half);
  for (std::size_t i = 0; i < half; ++i) ac[i] = g_op(a[i], a[i + half], left_bits[i]);
  run(node.right, depth + 1);
  for (std::size_t i = 0; i < half; ++i) {
    b[i] = left_bits[i] ^ bc[i];
    b[i + half] = bc[i];
  }
  last_steps_ += rules_.f_step + rules_.g_step + rules_.combine_step;
}

std::vector<std::uint8_t> FastDecoder::decode(std::span<const double> llr) {
  const std::size_t N = std::size_t{1} << code_->n;
  if (llr.size() != N) throw std::invalid_argument("FastDecoder: llr size != N");
  last_steps_ = 0;
  std::copy(llr.begin(), llr.end(), alpha_[0].begin());
  run(0, 0);
  // beta_[0] is the codeword estimate; the transform is involutive, so applying
  // it again recovers u, from which the info positions are read out.
  std::vector<std::uint8_t> u(beta_[0]);
  polar_transform(std::span<std::uint8_t>(u));
  std::vector<std::uint8_t> msg(code_->info_set.size());
  for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = u[code_->info_set[i]];
  return msg;
}

std::vector<std::uint8_t> fast_decode(const PolarCode& code, std::span<const double> llr,
                                      FeatureSet features, long* steps) {
  DecodePlan plan = classify(code, features);
  FastDecoder dec(code, plan);
  auto msg = dec.decode(llr);
  if (steps) *steps = dec.last_steps();
  return msg;
}

} // namespace polar
