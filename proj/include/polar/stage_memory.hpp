#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace polar {

// Per-stage scratch of one decoding path: stage s holds 2^s LLRs and 2^s
// partial-sum bits (the root stage n holds the N channel LLRs). Copying a
// StageMemory only shares the underlying buffers; a writer clones a buffer
// first whenever it is shared, so copies are observationally deep.
template <class LlrT>
class StageMemory {
 public:
  StageMemory() = default;

  StageMemory(int n, std::span<const LlrT> channel_llrs) : n_(n) {
    if ((std::size_t(1) << n) != channel_llrs.size()) {
      throw std::invalid_argument("StageMemory: channel LLR count must be 2^n");
    }
    llr_.resize(n + 1);
    psum_.resize(n + 1);
    for (int s = 0; s <= n; ++s) {
      llr_[s] = std::make_shared<std::vector<LlrT>>(std::size_t(1) << s);
      psum_[s] = std::make_shared<std::vector<uint8_t>>(std::size_t(1) << s, 0);
    }
    std::copy(channel_llrs.begin(), channel_llrs.end(), llr_[n]->begin());
  }

  int depth() const { return n_; }
  const std::vector<LlrT>& llr(int s) const { return *llr_[s]; }
  std::vector<LlrT>& llr_mut(int s) { return mut(llr_[s]); }
  const std::vector<uint8_t>& psum(int s) const { return *psum_[s]; }
  std::vector<uint8_t>& psum_mut(int s) { return mut(psum_[s]); }

  std::size_t leaves_done() const { return leaves_done_; }
  void advance_leaves(std::size_t count) { leaves_done_ += count; }

 private:
  template <class V>
  static V& mut(std::shared_ptr<V>& p) {
    if (p.use_count() > 1) p = std::make_shared<V>(*p);
    return *p;
  }

  int n_ = 0;
  std::size_t leaves_done_ = 0;
  std::vector<std::shared_ptr<std::vector<LlrT>>> llr_;
  std::vector<std::shared_ptr<std::vector<uint8_t>>> psum_;
};

}  // namespace polar
