#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

double awgn_sigma(double snr_db) {
  if (!std::isfinite(snr_db)) throw std::invalid_argument("awgn_sigma: SNR must be finite");
  return std::sqrt(1.0 / (2.0 * std::pow(10.0, snr_db / 10.0)));
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
  return splitmix64(splitmix64(splitmix64(a) ^ b) ^ c);
}

double GaussianRng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

ChannelObservation bpsk_modulate(const BitVector& x, double sigma, GaussianRng& rng,
                                 bool noiseless) {
  ChannelObservation obs;
  obs.sigma = sigma;
  obs.y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double symbol = x[i] ? -1.0 : 1.0;
    obs.y[i] = noiseless ? symbol : symbol + sigma * rng.normal();
  }
  return obs;
}

ChannelObservation bpsk_awgn(const BitVector& x, double snr_db, uint64_t seed) {
  GaussianRng rng(seed);
  return bpsk_modulate(x, awgn_sigma(snr_db), rng);
}

std::vector<double> channel_llr(const ChannelObservation& obs) {
  if (!(obs.sigma > 0.0)) throw std::invalid_argument("channel_llr: sigma must be positive");
  const double factor = 2.0 / (obs.sigma * obs.sigma);
  std::vector<double> llr(obs.y.size());
  for (std::size_t i = 0; i < obs.y.size(); ++i) llr[i] = factor * obs.y[i];
  return llr;
}

}  // namespace polar
