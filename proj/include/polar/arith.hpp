#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace polar {

// Min-sum decoding arithmetic shared by all decoders:
//   f(a, b) = (sgn(a) ^ sgn(b)) * min(|a|, |b|)
//   g(s, a, b) = (-1)^s * a + b
//   hard(x) = (x < 0), so zero decides 0
//   path metric grows by |llr| on a hard-decision mismatch
// FloatArith works on doubles; FixedArith saturates to q / q_pm bits and
// never wraps.

struct FloatArith {
  using llr_t = double;
  using pm_t = double;
  // Unbounded metrics stay absolute (equal to the accumulated penalties).
  static constexpr bool kNormalizeMetrics = false;

  llr_t f(llr_t a, llr_t b) const {
    const llr_t m = std::min(std::fabs(a), std::fabs(b));
    return ((a < 0) != (b < 0)) ? -m : m;
  }
  llr_t g(uint8_t s_hat, llr_t a, llr_t b) const { return s_hat ? b - a : a + b; }
  static uint8_t hard(llr_t x) { return x < 0 ? 1 : 0; }
  static llr_t magnitude(llr_t x) { return std::fabs(x); }
  pm_t zero_pm() const { return 0.0; }
  pm_t pm_add(pm_t pm, llr_t mag) const { return pm + mag; }
  pm_t pm_update(pm_t pm, llr_t leaf, uint8_t u_hat) const {
    return u_hat == hard(leaf) ? pm : pm + std::fabs(leaf);
  }
};

class FixedArith {
 public:
  using llr_t = int32_t;
  using pm_t = uint32_t;
  // Q_PM bits only resolve metric differences, so the list decoders subtract
  // the running minimum after every prune; otherwise every path pins at the
  // saturation value within a few hundred leaves and pruning degenerates.
  static constexpr bool kNormalizeMetrics = true;

  FixedArith(int q, int q_pm) : q_(q), q_pm_(q_pm) {
    if (q < 2 || q > 30) throw std::invalid_argument("FixedArith: need 2 <= q <= 30");
    if (q_pm < 1 || q_pm > 32) throw std::invalid_argument("FixedArith: need 1 <= q_pm <= 32");
    llr_hi_ = (1 << (q - 1)) - 1;
    llr_lo_ = -(1 << (q - 1));
    pm_hi_ = q_pm >= 32 ? 0xffffffffu : ((uint32_t(1) << q_pm) - 1);
  }

  llr_t f(llr_t a, llr_t b) const {
    const int64_t m = std::min(std::abs(static_cast<int64_t>(a)), std::abs(static_cast<int64_t>(b)));
    return clamp_llr(((a < 0) != (b < 0)) ? -m : m);
  }
  llr_t g(uint8_t s_hat, llr_t a, llr_t b) const {
    const int64_t sum = s_hat ? static_cast<int64_t>(b) - a : static_cast<int64_t>(a) + b;
    return clamp_llr(sum);
  }
  static uint8_t hard(llr_t x) { return x < 0 ? 1 : 0; }
  static llr_t magnitude(llr_t x) { return x < 0 ? -x : x; }
  pm_t zero_pm() const { return 0; }
  pm_t pm_add(pm_t pm, llr_t mag) const {
    const uint64_t sum = static_cast<uint64_t>(pm) + static_cast<uint64_t>(mag);
    return sum > pm_hi_ ? pm_hi_ : static_cast<pm_t>(sum);
  }
  pm_t pm_update(pm_t pm, llr_t leaf, uint8_t u_hat) const {
    return u_hat == hard(leaf) ? pm : pm_add(pm, magnitude(leaf));
  }

  int q() const { return q_; }
  int q_pm() const { return q_pm_; }
  llr_t llr_max() const { return llr_hi_; }
  llr_t llr_min() const { return llr_lo_; }
  pm_t pm_max() const { return pm_hi_; }

 private:
  llr_t clamp_llr(int64_t v) const {
    return static_cast<llr_t>(v < llr_lo_ ? llr_lo_ : (v > llr_hi_ ? llr_hi_ : v));
  }
  int q_;
  int q_pm_;
  llr_t llr_hi_;
  llr_t llr_lo_;
  pm_t pm_hi_;
};

}  // namespace polar
