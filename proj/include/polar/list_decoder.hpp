#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polar/codec.hpp"
#include "polar/crc24.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

template <class Arith>
struct DecoderPath {
  typename Arith::pm_t metric{};
  StageMemory<typename Arith::llr_t> mem;
  BitVector decoded;  // full length N, filled as leaves complete
  int parent_tag = 0;
};

template <class Arith>
struct PathList {
  std::vector<DecoderPath<Arith>> paths;
  int list_size = 1;
};

// One expansion candidate. `branch` carries the new bit for bit-by-bit
// decoding, or the packed unreliable-bit assignment for block decoding
// (msb = first leaf), and doubles as the last tie-break key.
template <class PmT>
struct LeafCandidate {
  PmT metric{};
  int parent_tag = 0;
  uint32_t branch = 0;
};

template <class C>
bool candidate_before(const C& a, const C& b) {
  if (a.metric != b.metric) return a.metric < b.metric;
  if (a.parent_tag != b.parent_tag) return a.parent_tag < b.parent_tag;
  return a.branch < b.branch;
}

// Keep the L smallest metrics; ties go to the smaller parent tag, then the
// 0 branch. Candidate order is preserved when nothing is dropped.
template <class C>
std::vector<C> prune_to_list(std::vector<C> candidates, int L) {
  if (candidates.empty()) throw std::invalid_argument("prune_to_list: no candidates");
  if (static_cast<int>(candidates.size()) <= L) return candidates;
  std::sort(candidates.begin(), candidates.end(), candidate_before<C>);
  candidates.resize(L);
  return candidates;
}

// Frozen leaf: one candidate per path with the bit forced to 0. Information
// leaf: both continuations of every path.
template <class Arith>
std::vector<LeafCandidate<typename Arith::pm_t>> expand_leaf(
    const Arith& ar, const PathList<Arith>& list,
    std::span<const typename Arith::llr_t> leaf_llrs, bool frozen) {
  std::vector<LeafCandidate<typename Arith::pm_t>> out;
  out.reserve(list.paths.size() * (frozen ? 1 : 2));
  for (int tag = 0; tag < static_cast<int>(list.paths.size()); ++tag) {
    const auto pm = list.paths[tag].metric;
    out.push_back({ar.pm_update(pm, leaf_llrs[tag], 0), tag, 0});
    if (!frozen) out.push_back({ar.pm_update(pm, leaf_llrs[tag], 1), tag, 1});
  }
  return out;
}

namespace detail {

// Rebuild the survivor list from pruned candidates; the last candidate that
// references a parent steals it instead of copying.
template <class Arith, class C, class Apply>
std::vector<DecoderPath<Arith>> rebuild_paths(std::vector<DecoderPath<Arith>>& parents,
                                              const std::vector<C>& kept, Apply&& apply) {
  std::vector<int> remaining(parents.size(), 0);
  for (const C& c : kept) ++remaining[c.parent_tag];
  std::vector<DecoderPath<Arith>> next;
  next.reserve(kept.size());
  for (const C& c : kept) {
    DecoderPath<Arith> p = (--remaining[c.parent_tag] == 0)
                               ? std::move(parents[c.parent_tag])
                               : parents[c.parent_tag];
    p.metric = c.metric;
    p.parent_tag = c.parent_tag;
    apply(p, c);
    next.push_back(std::move(p));
  }
  return next;
}

// Shift all metrics down by the current minimum (fixed point only); relative
// order is untouched and the saturating width keeps resolving differences.
template <class Arith>
void normalize_metrics(std::vector<DecoderPath<Arith>>& paths) {
  if constexpr (Arith::kNormalizeMetrics) {
    auto min_metric = paths.front().metric;
    for (const auto& p : paths) min_metric = std::min(min_metric, p.metric);
    if (min_metric > 0) {
      for (auto& p : paths) p.metric -= min_metric;
    }
  }
}

}  // namespace detail

// Bit-by-bit CRC-aided list decoding: start from the single empty path with
// metric 0, expand and prune at every leaf, per-path stage memories evolve
// copy-on-branch.
template <class Arith>
PathList<Arith> decode_lscd_bitwise(const Arith& ar,
                                    std::span<const typename Arith::llr_t> channel_llrs,
                                    const PolarCodeSpec& spec, int L) {
  if (L < 1) throw std::invalid_argument("decode_lscd_bitwise: L must be >= 1");
  using LlrT = typename Arith::llr_t;
  PathList<Arith> list;
  list.list_size = L;
  list.paths.push_back({ar.zero_pm(), StageMemory<LlrT>(spec.n, channel_llrs),
                        BitVector(spec.block_length, 0), 0});
  std::vector<LlrT> leaf_llrs;
  for (int i = 0; i < spec.block_length; ++i) {
    leaf_llrs.clear();
    for (auto& p : list.paths) {
      refine_llrs(ar, p.mem, 0, static_cast<std::size_t>(i));
      leaf_llrs.push_back(p.mem.llr(0)[0]);
    }
    auto kept = prune_to_list(expand_leaf(ar, list, leaf_llrs, spec.frozen[i] != 0), L);
    list.paths = detail::rebuild_paths(list.paths, kept, [&](DecoderPath<Arith>& p, const auto& c) {
      p.decoded[i] = static_cast<uint8_t>(c.branch);
      partial_sum_update(p.mem, static_cast<std::size_t>(i), static_cast<uint8_t>(c.branch));
    });
    detail::normalize_metrics(list.paths);
  }
  return list;
}

enum class CrcStatus { pass, fail };

struct DecodeSelection {
  BitVector payload;  // K - r bits
  CrcStatus status = CrcStatus::fail;
  std::size_t path_index = 0;
  BitVector u;  // selected source word
};

// Smallest-metric CRC-passing path; if none passes, fall back to the
// smallest-metric path with status fail. Metric ties keep list order.
template <class Arith>
DecodeSelection select_output(const PathList<Arith>& list, const PolarCodeSpec& spec) {
  if (list.paths.empty()) throw std::logic_error("select_output: empty list");
  std::ptrdiff_t best_pass = -1, best_any = -1;
  std::vector<PayloadView> views(list.paths.size());
  for (std::size_t i = 0; i < list.paths.size(); ++i) {
    views[i] = extract_payload(list.paths[i].decoded, spec);
    if (best_any < 0 || list.paths[i].metric < list.paths[best_any].metric) {
      best_any = static_cast<std::ptrdiff_t>(i);
    }
    if (views[i].crc_ok &&
        (best_pass < 0 || list.paths[i].metric < list.paths[best_pass].metric)) {
      best_pass = static_cast<std::ptrdiff_t>(i);
    }
  }
  const std::size_t chosen = static_cast<std::size_t>(best_pass >= 0 ? best_pass : best_any);
  DecodeSelection sel;
  sel.payload = std::move(views[chosen].payload);
  sel.status = best_pass >= 0 ? CrcStatus::pass : CrcStatus::fail;
  sel.path_index = chosen;
  sel.u = list.paths[chosen].decoded;
  return sel;
}

}  // namespace polar
