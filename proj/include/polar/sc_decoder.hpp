#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "polar/arith.hpp"
#include "polar/construction.hpp"
#include "polar/stage_memory.hpp"

namespace polar {

// Node-visit trace of the scheduling-tree traversal. `stage` is the stage the
// kernel batch reads from, so an F at stage s produces the 2^(s-1) values of
// stage s-1. 'L' marks a leaf (list-management) visit.
struct NodeVisit {
  char kind;  // 'F', 'G', 'L'
  int stage;
  bool operator==(const NodeVisit&) const = default;
};
using VisitLog = std::vector<NodeVisit>;

// Recompute LLR buffers so mem.llr(s) holds the values of `block` at stage s.
// Blocks must be visited left to right, which makes the parent buffer still
// valid when a right child (G) is requested.
template <class Arith>
void refine_llrs(const Arith& ar, StageMemory<typename Arith::llr_t>& mem, int s,
                 std::size_t block, VisitLog* log = nullptr) {
  if (s == mem.depth()) return;
  if ((block & 1) == 0) refine_llrs(ar, mem, s + 1, block >> 1, log);
  const std::size_t half = std::size_t(1) << s;
  const auto& parent = mem.llr(s + 1);
  auto& out = mem.llr_mut(s);
  if ((block & 1) == 0) {
    if (log) log->push_back({'F', s + 1});
    for (std::size_t j = 0; j < half; ++j) out[j] = ar.f(parent[j], parent[j + half]);
  } else {
    if (log) log->push_back({'G', s + 1});
    const auto& s_hat = mem.psum(s);
    for (std::size_t j = 0; j < half; ++j) out[j] = ar.g(s_hat[j], parent[j], parent[j + half]);
  }
}

// Fold the stage-s partial sums of the just-completed block upward through
// every stage whose left subtree finished with it.
template <class LlrT>
void absorb_block_psums(StageMemory<LlrT>& mem, int s, std::size_t block,
                        std::vector<uint8_t> sums) {
  if ((block << s) != mem.leaves_done()) {
    throw std::logic_error("absorb_block_psums: blocks must complete in order");
  }
  const std::size_t leaves = std::size_t(1) << s;
  while (block & 1) {
    const auto& left = mem.psum(s);
    std::vector<uint8_t> up(left.size() * 2);
    for (std::size_t j = 0; j < left.size(); ++j) {
      up[j] = static_cast<uint8_t>(left[j] ^ sums[j]);
      up[j + left.size()] = sums[j];
    }
    sums = std::move(up);
    block >>= 1;
    ++s;
  }
  mem.psum_mut(s) = std::move(sums);
  mem.advance_leaves(leaves);
}

template <class LlrT>
void partial_sum_update(StageMemory<LlrT>& mem, std::size_t leaf_index, uint8_t bit) {
  absorb_block_psums(mem, 0, leaf_index, {bit});
}

// Single-path successive cancellation: depth-first traversal visiting the
// F child before the G child, frozen leaves forced to 0.
template <class Arith>
BitVector decode_sc(const Arith& ar, std::span<const typename Arith::llr_t> channel_llrs,
                    const PolarCodeSpec& spec, VisitLog* log = nullptr) {
  StageMemory<typename Arith::llr_t> mem(spec.n, channel_llrs);
  BitVector u(spec.block_length, 0);
  for (int i = 0; i < spec.block_length; ++i) {
    refine_llrs(ar, mem, 0, static_cast<std::size_t>(i), log);
    const auto leaf = mem.llr(0)[0];
    u[i] = spec.frozen[i] ? 0 : Arith::hard(leaf);
    if (log) log->push_back({'L', 0});
    partial_sum_update(mem, static_cast<std::size_t>(i), u[i]);
  }
  return u;
}

}  // namespace polar
