#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polar/construction.hpp"
#include "polar/list_decoder.hpp"

namespace polar {

enum class LeafRole : uint8_t { frozen = 0, unreliable = 1, reliable = 2 };

// One 2^m-leaf subtree: role of each leaf in decoding order.
struct SubtreeBlock {
  int m = 0;
  int size = 0;  // M = 2^m
  std::vector<LeafRole> role;
  int m_u = 0;
  int m_r = 0;
  int m_frozen = 0;
};

inline SubtreeBlock make_subtree_block(const PolarCodeSpec& spec, const SePartition& part,
                                       int m, std::size_t block) {
  if (m < 0 || m > spec.n) throw std::invalid_argument("make_subtree_block: need 0 <= m <= n");
  SubtreeBlock blk;
  blk.m = m;
  blk.size = 1 << m;
  blk.role.resize(blk.size);
  for (int j = 0; j < blk.size; ++j) {
    const std::size_t leaf = block * blk.size + j;
    if (spec.frozen[leaf]) {
      blk.role[j] = LeafRole::frozen;
      ++blk.m_frozen;
    } else if (part.is_unreliable[leaf]) {
      blk.role[j] = LeafRole::unreliable;
      ++blk.m_u;
    } else {
      blk.role[j] = LeafRole::reliable;
      ++blk.m_r;
    }
  }
  return blk;
}

// Multi-bit metric update from the subtree root: with v = leaves * F^(m),
// gamma_out = gamma_in + sum_i (v_i ^ hard(L_i)) * |L_i|.
template <class Arith>
typename Arith::pm_t mbd_metric(const Arith& ar, typename Arith::pm_t gamma_in,
                                std::span<const typename Arith::llr_t> root_llrs,
                                const BitVector& leaves) {
  if (root_llrs.size() != leaves.size() || !is_power_of_two(leaves.size())) {
    throw std::invalid_argument("mbd_metric: need 2^m leaves matching the root LLRs");
  }
  const BitVector v = polar_transform(leaves);
  auto pm = gamma_in;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != Arith::hard(root_llrs[i])) pm = ar.pm_add(pm, Arith::magnitude(root_llrs[i]));
  }
  return pm;
}

// Candidate produced by expanding one survival path with one assignment of
// the unreliable bits; `leaves` is the full M-bit completion.
template <class Arith>
struct ExpansionCandidate {
  typename Arith::pm_t metric{};
  int parent_tag = 0;
  uint32_t branch = 0;  // packed unreliable assignment, msb = first unreliable leaf
  BitVector leaves;
};

namespace detail {

// Build the M leaves from a packed unreliable assignment and a packed
// reliable assignment (both msb-first in leaf order); frozen leaves are 0.
inline BitVector subtree_leaves(const SubtreeBlock& blk, uint32_t unreliable_bits,
                                uint32_t reliable_bits) {
  BitVector leaves(blk.size, 0);
  int ui = 0, ri = 0;
  for (int j = 0; j < blk.size; ++j) {
    switch (blk.role[j]) {
      case LeafRole::frozen:
        break;
      case LeafRole::unreliable:
        leaves[j] = static_cast<uint8_t>((unreliable_bits >> (blk.m_u - 1 - ui)) & 1u);
        ++ui;
        break;
      case LeafRole::reliable:
        leaves[j] = static_cast<uint8_t>((reliable_bits >> (blk.m_r - 1 - ri)) & 1u);
        ++ri;
        break;
    }
  }
  return leaves;
}

}  // namespace detail

// gamma_out = min over the 2^M_r reliable-bit assignments of the multi-bit
// metric, with the unreliable bits held at `unreliable_bits` and frozen
// leaves at 0. Ties keep the lexicographically smallest reliable assignment.
template <class Arith>
ExpansionCandidate<Arith> lclm_expand(const Arith& ar, typename Arith::pm_t gamma_in,
                                      const SubtreeBlock& blk,
                                      std::span<const typename Arith::llr_t> root_llrs,
                                      uint32_t unreliable_bits, int parent_tag = 0) {
  ExpansionCandidate<Arith> best;
  best.parent_tag = parent_tag;
  best.branch = unreliable_bits;
  bool first = true;
  for (uint32_t rho = 0; rho < (1u << blk.m_r); ++rho) {
    BitVector leaves = detail::subtree_leaves(blk, unreliable_bits, rho);
    const auto pm = mbd_metric(ar, gamma_in, root_llrs, leaves);
    if (first || pm < best.metric) {
      best.metric = pm;
      best.leaves = std::move(leaves);
      first = false;
    }
  }
  return best;
}

// Selective-expansion completion: descend the subtree sequentially, frozen
// leaves 0, unreliable leaves from the assignment, reliable leaves
// hard-decided from their leaf LLR; the metric accumulates leaf by leaf.
template <class Arith>
std::pair<BitVector, typename Arith::pm_t> se_complete(
    const Arith& ar, typename Arith::pm_t gamma_in, const SubtreeBlock& blk,
    std::span<const typename Arith::llr_t> root_llrs, uint32_t unreliable_bits) {
  using LlrT = typename Arith::llr_t;
  BitVector leaves;
  leaves.reserve(blk.size);
  auto pm = gamma_in;
  int ui = 0;
  auto descend = [&](auto&& self, std::span<const LlrT> llrs, int s) -> std::vector<uint8_t> {
    if (s == 0) {
      const int j = static_cast<int>(leaves.size());
      uint8_t bit = 0;
      if (blk.role[j] == LeafRole::unreliable) {
        bit = static_cast<uint8_t>((unreliable_bits >> (blk.m_u - 1 - ui)) & 1u);
        ++ui;
      } else if (blk.role[j] == LeafRole::reliable) {
        bit = Arith::hard(llrs[0]);
      }
      pm = ar.pm_update(pm, llrs[0], bit);
      leaves.push_back(bit);
      return {bit};
    }
    const std::size_t half = std::size_t(1) << (s - 1);
    std::vector<LlrT> child(half);
    for (std::size_t j = 0; j < half; ++j) child[j] = ar.f(llrs[j], llrs[j + half]);
    const auto left = self(self, std::span<const LlrT>(child), s - 1);
    for (std::size_t j = 0; j < half; ++j) child[j] = ar.g(left[j], llrs[j], llrs[j + half]);
    const auto right = self(self, std::span<const LlrT>(child), s - 1);
    std::vector<uint8_t> sums(2 * half);
    for (std::size_t j = 0; j < half; ++j) {
      sums[j] = static_cast<uint8_t>(left[j] ^ right[j]);
      sums[j + half] = right[j];
    }
    return sums;
  };
  descend(descend, root_llrs, blk.m);
  return {std::move(leaves), pm};
}

// 2^M_u candidates per survival path (a single one when M_u = 0).
template <class Arith>
std::vector<ExpansionCandidate<Arith>> expand_block(
    const Arith& ar, const PathList<Arith>& list, const SubtreeBlock& blk,
    const std::vector<std::vector<typename Arith::llr_t>>& root_llrs_per_path,
    bool se_only = false) {
  std::vector<ExpansionCandidate<Arith>> out;
  out.reserve(list.paths.size() << blk.m_u);
  for (int tag = 0; tag < static_cast<int>(list.paths.size()); ++tag) {
    const auto gamma_in = list.paths[tag].metric;
    std::span<const typename Arith::llr_t> roots(root_llrs_per_path[tag]);
    for (uint32_t alpha = 0; alpha < (1u << blk.m_u); ++alpha) {
      if (se_only) {
        auto [leaves, pm] = se_complete(ar, gamma_in, blk, roots, alpha);
        out.push_back({pm, tag, alpha, std::move(leaves)});
      } else {
        out.push_back(lclm_expand(ar, gamma_in, blk, roots, alpha, tag));
      }
    }
  }
  return out;
}

// Functionally a prune_to_list; `rounds` counts the serialized 2L-to-L
// sorter passes the hardware would spend, max(1, 2^M_u - 1).
template <class C>
struct SerialPruneResult {
  std::vector<C> kept;
  int rounds = 1;
};

template <class C>
SerialPruneResult<C> serial_prune(std::vector<C> candidates, int L, int m_u) {
  SerialPruneResult<C> result;
  result.kept = prune_to_list(std::move(candidates), L);
  result.rounds = m_u >= 1 ? (1 << m_u) - 1 : 1;
  return result;
}

// List decoding with low-complexity list management: the tree is traversed
// down to stage m only; each 2^m-leaf block is resolved jointly, expanding
// unreliable bits and minimizing over reliable ones. With se_only the
// reliable bits are hard-decided sequentially instead.
template <class Arith>
PathList<Arith> decode_lscd_lclm(const Arith& ar,
                                 std::span<const typename Arith::llr_t> channel_llrs,
                                 const PolarCodeSpec& spec, const SePartition& part, int L,
                                 int m, bool se_only = false) {
  if (L < 1) throw std::invalid_argument("decode_lscd_lclm: L must be >= 1");
  if (m < 0 || m > spec.n) throw std::invalid_argument("decode_lscd_lclm: need 0 <= m <= n");
  using LlrT = typename Arith::llr_t;
  PathList<Arith> list;
  list.list_size = L;
  list.paths.push_back({ar.zero_pm(), StageMemory<LlrT>(spec.n, channel_llrs),
                        BitVector(spec.block_length, 0), 0});
  const int M = 1 << m;
  const std::size_t n_blocks = static_cast<std::size_t>(spec.block_length) / M;
  std::vector<std::vector<LlrT>> roots;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    roots.assign(list.paths.size(), {});
    for (std::size_t t = 0; t < list.paths.size(); ++t) {
      refine_llrs(ar, list.paths[t].mem, m, b);
      roots[t] = list.paths[t].mem.llr(m);
    }
    const SubtreeBlock blk = make_subtree_block(spec, part, m, b);
    auto candidates = expand_block(ar, list, blk, roots, se_only);
    std::vector<ExpansionCandidate<Arith>> kept;
    if (blk.m_u > 0 && static_cast<int>(candidates.size()) > L) {
      kept = serial_prune(std::move(candidates), L, blk.m_u).kept;
    } else {
      kept = std::move(candidates);
    }
    list.paths = detail::rebuild_paths(list.paths, kept, [&](DecoderPath<Arith>& p, const auto& c) {
      for (int j = 0; j < M; ++j) p.decoded[b * M + j] = c.leaves[j];
      absorb_block_psums(p.mem, m, b, polar_transform(c.leaves));
    });
    detail::normalize_metrics(list.paths);
  }
  return list;
}

}  // namespace polar
