#include "polarsn/seq_decoders.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polarsn/sc_decoder.hpp"

namespace polar {

namespace {

void add_steps(const SeqDecodeOptions& opt, long s) {
  if (opt.rules && opt.steps) *opt.steps += s;
}

void check_node(std::span<const double> llr, const NodeSpec& spec,
                std::span<const std::uint8_t> indicator) {
  if (llr.size() != (std::size_t{1} << spec.level) || indicator.size() != llr.size())
    throw std::invalid_argument("seq_decoders: llr/indicator size != 2^level");
}

} // namespace

std::vector<std::uint8_t> decode_rate0(std::size_t len) {
  return std::vector<std::uint8_t>(len, 0);
}

std::vector<std::uint8_t> decode_rate1(std::span<const double> llr) {
  std::vector<std::uint8_t> bits(llr.size());
  for (std::size_t i = 0; i < llr.size(); ++i) bits[i] = hard_decision(llr[i]);
  return bits;
}

std::vector<std::uint8_t> decode_rep(std::span<const double> llr) {
  double sum = 0.0;
  for (double v : llr) sum += v;
  return std::vector<std::uint8_t>(llr.size(), hard_decision(sum));
}

std::vector<std::uint8_t> decode_spc(std::span<const double> llr, int check_bit) {
  std::vector<std::uint8_t> bits(llr.size());
  int parity = check_bit & 1;
  std::size_t weakest = 0;
  double weakest_mag = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < llr.size(); ++i) {
    bits[i] = hard_decision(llr[i]);
    parity ^= bits[i];
    const double mag = std::fabs(llr[i]);
    if (mag < weakest_mag) {
      weakest_mag = mag;
      weakest = i;
    }
  }
  if (parity) bits[weakest] ^= 1;
  return bits;
}

std::vector<std::uint8_t> decode_sr0rep(std::span<const double> llr,
                                        const NodeSpec& spec,
                                        std::span<const std::uint8_t> indicator,
                                        const SeqDecodeOptions& opt) {
  check_node(llr, spec, indicator);
  const int p = spec.level, q = spec.q;
  const std::size_t sq = std::size_t{1} << q;
  const std::size_t segments = std::size_t{1} << (p - q);

  // candidate repetition sequences: Kronecker product of [eta_r, 1] factors,
  // level p-1 outermost; eta is free only at REP chain levels
  std::vector<int> free_levels(spec.rep_levels);
  const std::size_t n_free = free_levels.size();

  std::vector<double> best_src(sq), src(sq);
  std::vector<std::int8_t> best_s(segments), s(segments);
  double best_score = -std::numeric_limits<double>::infinity();

  for (std::size_t mask = 0; mask < (std::size_t{1} << n_free); ++mask) {
    s.assign(1, 1);
    for (int r = p - 1; r >= q; --r) {
      int eta = 1;
      for (std::size_t j = 0; j < n_free; ++j)
        if (free_levels[j] == r && (mask >> j) & 1) eta = -1;
      // acc = acc (x) [eta, 1]
      std::vector<std::int8_t> next(s.size() * 2);
      for (std::size_t i = 0; i < s.size(); ++i) {
        next[2 * i] = static_cast<std::int8_t>(eta * s[i]);
        next[2 * i + 1] = s[i];
      }
      s = std::move(next);
    }
    double score = 0.0;
    for (std::size_t i = 0; i < sq; ++i) {
      double acc = 0.0;
      for (std::size_t m = 0; m < segments; ++m) acc += s[m] * llr[m * sq + i];
      src[i] = acc;
      score += std::fabs(acc);
    }
    if (score > best_score) {
      best_score = score;
      best_src = src;
      best_s = s;
    }
  }
  if (opt.rules)
    add_steps(opt, sr0_fold_steps(p - q, *opt.rules) +
                       sr0_select_steps(static_cast<int>(n_free), *opt.rules));

  // a repetition source's summation already happened inside the fold
  const std::vector<std::uint8_t> src_bits =
      spec.source->kind == NodeKind::Rep
          ? decode_rep(best_src)
          : decode_node(best_src, *spec.source, indicator.last(sq), opt);

  std::vector<std::uint8_t> bits(llr.size());
  for (std::size_t m = 0; m < segments; ++m) {
    const std::uint8_t flip = best_s[m] < 0 ? 1 : 0;
    for (std::size_t i = 0; i < sq; ++i) bits[m * sq + i] = src_bits[i] ^ flip;
  }
  return bits;
}

std::vector<std::uint8_t> decode_sr1(std::span<const double> llr,
                                     const NodeSpec& spec,
                                     std::span<const std::uint8_t> indicator,
                                     const SeqDecodeOptions& opt) {
  check_node(llr, spec, indicator);
  const int p = spec.level, q = spec.q;
  const std::size_t sq = std::size_t{1} << q;
  const std::size_t width = std::size_t{1} << (p - q); // bits per stride

  // the parity-segment resolution stage is only charged when SPC siblings
  // exist; the per-stride Wagner flips fall out of the fold's argmin tracking
  const bool parity = !spec.spc_levels.empty();
  std::vector<std::uint8_t> src_bits;
  if (spec.source->kind == NodeKind::Rate0) {
    // no fold needed: parity targets are all zero
    src_bits.assign(sq, 0);
    add_steps(opt, opt.rules ? opt.rules->sr1_wagner : 0);
  } else {
    std::vector<double> src(sq);
    for (std::size_t k = 0; k < sq; ++k) {
      double mag = std::numeric_limits<double>::infinity();
      bool neg = false;
      for (std::size_t j = 0; j < width; ++j) {
        const double v = llr[k + j * sq];
        neg ^= (v < 0.0);
        mag = std::min(mag, std::fabs(v));
      }
      src[k] = neg ? -mag : mag;
    }
    if (spec.source->kind == NodeKind::Rep) {
      // both repetition values ride along with the fold in one merged stage
      src_bits = decode_rep(src);
      if (opt.rules)
        add_steps(opt, opt.rules->sr1_fold_near +
                           (parity ? opt.rules->sr1_wagner : 0));
    } else {
      if (opt.rules) add_steps(opt, sr1_fold_steps(p - q, *opt.rules));
      src_bits = decode_node(src, *spec.source, indicator.first(sq), opt);
      if (parity) add_steps(opt, opt.rules ? opt.rules->sr1_wagner : 0);
    }
  }

  // one Wagner subdecoder per stride, check bit = source bit
  std::vector<std::uint8_t> bits(llr.size());
  for (std::size_t k = 0; k < sq; ++k) {
    int parity = src_bits[k];
    std::size_t weakest = 0;
    double weakest_mag = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < width; ++j) {
      const double v = llr[k + j * sq];
      const std::uint8_t b = hard_decision(v);
      bits[k + j * sq] = b;
      parity ^= b;
      const double mag = std::fabs(v);
      if (mag < weakest_mag) {
        weakest_mag = mag;
        weakest = j;
      }
    }
    if (parity) bits[k + weakest * sq] ^= 1;
  }
  return bits;
}

std::vector<std::uint8_t> decode_sr1spc(std::span<const double> llr,
                                        const NodeSpec& spec,
                                        std::span<const std::uint8_t> indicator,
                                        const SeqDecodeOptions& opt) {
  std::vector<std::uint8_t> bits = decode_sr1(llr, spec, indicator, opt);
  if (spec.spc_levels.empty()) return bits;

  const GammaSpc gamma = gamma_spc(bits, spec);
  std::size_t mask = 0;
  for (std::size_t j = 0; j < spec.spc_levels.size(); ++j) {
    const int t = spec.spc_levels[j] - spec.q + 1;
    if (gamma.values[t - 1] == 1) mask |= std::size_t{1} << j;
  }
  if (!mask) return bits;

  std::vector<FlipCoordinate> storage;
  const std::vector<FlipCoordinate>* coords;
  if (mask < spec.flip_by_mask.size() && !spec.flip_by_mask[mask].empty()) {
    coords = &spec.flip_by_mask[mask];
  } else {
    storage = gen_sr1spc(gamma).coords;
    coords = &storage;
  }

  const std::size_t sq = std::size_t{1} << spec.q;
  auto penalty = [&](int k, std::size_t m) {
    const std::size_t pos = (static_cast<std::size_t>(k) - 1) * sq + m;
    return (bits[pos] ? -1.0 : 1.0) * llr[pos];
  };

  double best = std::numeric_limits<double>::infinity();
  int bk1 = 0, bk2 = 0;
  std::size_t bm = 0;
  for (const auto& c : *coords) {
    if (opt.flip_search == FlipSearch::JointOverOffsets) {
      for (std::size_t m = 0; m < sq; ++m) {
        const double lam = penalty(c.k1, m) + penalty(c.k2, m);
        if (lam < best) {
          best = lam;
          bk1 = c.k1;
          bk2 = c.k2;
          bm = m;
        }
      }
    } else {
      // fix m where the two segments are jointly least reliable
      std::size_t m_star = 0;
      double mag = std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < sq; ++m) {
        const std::size_t p1 = (static_cast<std::size_t>(c.k1) - 1) * sq + m;
        const std::size_t p2 = (static_cast<std::size_t>(c.k2) - 1) * sq + m;
        const double v = std::fabs(llr[p1]) + std::fabs(llr[p2]);
        if (v < mag) {
          mag = v;
          m_star = m;
        }
      }
      const double lam = penalty(c.k1, m_star) + penalty(c.k2, m_star);
      if (lam < best) {
        best = lam;
        bk1 = c.k1;
        bk2 = c.k2;
        bm = m_star;
      }
    }
  }
  bits[(static_cast<std::size_t>(bk1) - 1) * sq + bm] ^= 1;
  bits[(static_cast<std::size_t>(bk2) - 1) * sq + bm] ^= 1;
  add_steps(opt, opt.rules ? opt.rules->sr1_flip : 0);
  return bits;
}

std::vector<std::uint8_t> decode_plan_subtree(std::span<const double> llr,
                                              const DecodePlan& plan,
                                              std::span<const std::uint8_t> indicator,
                                              const SeqDecodeOptions& opt) {
  if (plan.tree.empty()) throw std::invalid_argument("decode_plan_subtree: empty plan");
  const std::size_t base_leaf = plan.tree.front().leaf_begin;
  auto walk = [&](auto&& self, int idx,
                  std::span<const double> a) -> std::vector<std::uint8_t> {
    const PlanNode& node = plan.tree[static_cast<std::size_t>(idx)];
    const std::size_t len = std::size_t{1} << node.level;
    if (node.entry >= 0) {
      const auto ind = indicator.subspan(node.leaf_begin - base_leaf, len);
      return decode_node(a, plan.entries[static_cast<std::size_t>(node.entry)], ind, opt);
    }
    const std::size_t half = len / 2;
    std::vector<double> child(half);
    for (std::size_t i = 0; i < half; ++i) child[i] = f_op(a[i], a[i + half]);
    const auto left_bits = self(self, node.left, child);
    for (std::size_t i = 0; i < half; ++i) child[i] = g_op(a[i], a[i + half], left_bits[i]);
    const auto right_bits = self(self, node.right, child);
    std::vector<std::uint8_t> out(len);
    for (std::size_t i = 0; i < half; ++i) {
      out[i] = left_bits[i] ^ right_bits[i];
      out[i + half] = right_bits[i];
    }
    if (opt.rules)
      add_steps(opt, opt.rules->f_step + opt.rules->g_step + opt.rules->combine_step);
    return out;
  };
  return walk(walk, 0, llr);
}

std::vector<std::uint8_t> decode_node(std::span<const double> llr,
                                      const NodeSpec& spec,
                                      std::span<const std::uint8_t> indicator,
                                      const SeqDecodeOptions& opt) {
  switch (spec.kind) {
    case NodeKind::Rate0:
      add_steps(opt, opt.rules ? opt.rules->rate0 : 0);
      return decode_rate0(llr.size());
    case NodeKind::Rate1:
      add_steps(opt, opt.rules ? opt.rules->rate1 : 0);
      return decode_rate1(llr);
    case NodeKind::Rep:
      add_steps(opt, opt.rules ? opt.rules->rep : 0);
      return decode_rep(llr);
    case NodeKind::Spc:
      add_steps(opt, opt.rules ? opt.rules->spc : 0);
      return decode_spc(llr);
    case NodeKind::Sr0Rep:
      return decode_sr0rep(llr, spec, indicator, opt);
    case NodeKind::Sr1Spc:
      return decode_sr1spc(llr, spec, indicator, opt);
    case NodeKind::Generic:
      if (spec.sub_plan) return decode_plan_subtree(llr, *spec.sub_plan, indicator, opt);
      add_steps(opt, opt.rules ? generic_steps(spec.level, *opt.rules) : 0);
      return sc_decode_subtree(llr, indicator);
  }
  throw std::logic_error("decode_node: bad kind");
}

} // namespace polar
