#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polar/bits.hpp"

namespace polar {

// SNR convention everywhere: Es/N0 in dB per transmitted BPSK symbol, so
// sigma^2 = 1 / (2 * 10^(snr_db/10)). Curves shift if you assume Eb/N0;
// the sweep reports both axes.
double awgn_sigma(double snr_db);

struct ChannelObservation {
  std::vector<double> y;
  double sigma = 0.0;
};

uint64_t splitmix64(uint64_t x);
uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c);

// mt19937_64 with an explicit Box-Muller transform so the generated sequence
// does not depend on the standard library's normal_distribution.
class GaussianRng {
 public:
  explicit GaussianRng(uint64_t seed) : gen_(seed) {}
  uint64_t next_u64() { return gen_(); }
  uint8_t bit() { return static_cast<uint8_t>(next_u64() & 1u); }
  double uniform() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  double normal();

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// BPSK mapping bit 0 -> +1, bit 1 -> -1, plus i.i.d. Gaussian noise.
ChannelObservation bpsk_awgn(const BitVector& x, double snr_db, uint64_t seed);
ChannelObservation bpsk_modulate(const BitVector& x, double sigma, GaussianRng& rng,
                                 bool noiseless = false);

// L_i = 2 * y_i / sigma^2; positive favors bit 0.
std::vector<double> channel_llr(const ChannelObservation& obs);

}  // namespace polar
