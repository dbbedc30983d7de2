#include "polar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polar {
namespace {

// phi(x) = 1 - E[tanh(u/2)] for u ~ N(x, 2x), Chung's curve fit below x = 10
// and the asymptotic expansion above.
double phi(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 10.0) return std::exp(-0.4527 * std::pow(x, 0.86) + 0.0218);
  return std::sqrt(M_PI / x) * std::exp(-x / 4.0) * (1.0 - 10.0 / (7.0 * x));
}

double phi_inv(double y) {
  if (y >= 1.0) return 0.0;
  const double y10 = phi(10.0);
  if (y > y10) {
    return std::pow((0.0218 - std::log(y)) / 0.4527, 1.0 / 0.86);
  }
  double lo = 10.0, hi = 10.0;
  while (phi(hi) > y && hi < 1e9) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (phi(mid) > y) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double check_node_mean(double m) { return phi_inv(1.0 - (1.0 - phi(m)) * (1.0 - phi(m))); }

}  // namespace

ReliabilityProfile gaussian_approx_reliabilities(int n, double design_snr_db) {
  if (n < 1) throw std::invalid_argument("gaussian_approx_reliabilities: n must be >= 1");
  if (n > 20) throw std::invalid_argument("gaussian_approx_reliabilities: n > 20 refused");
  if (!std::isfinite(design_snr_db)) {
    throw std::invalid_argument("gaussian_approx_reliabilities: design SNR must be finite");
  }
  // Channel LLR mean for BPSK over AWGN at Es/N0: 2/sigma^2 = 4 * 10^(snr/10).
  const double channel_mean = 4.0 * std::pow(10.0, design_snr_db / 10.0);
  std::vector<double> means{channel_mean};
  for (int level = 0; level < n; ++level) {
    std::vector<double> next(means.size() * 2);
    for (std::size_t j = 0; j < means.size(); ++j) {
      next[2 * j] = check_node_mean(means[j]);
      next[2 * j + 1] = 2.0 * means[j];
    }
    means = std::move(next);
  }
  ReliabilityProfile profile;
  profile.n = n;
  profile.design_snr_db = design_snr_db;
  profile.pe.resize(means.size());
  for (std::size_t i = 0; i < means.size(); ++i) {
    // P(LLR < 0) for LLR ~ N(m, 2m) is Q(sqrt(m/2)).
    profile.pe[i] = 0.5 * std::erfc(std::sqrt(means[i]) / 2.0);
  }
  return profile;
}

PolarCodeSpec build_code_spec(const ReliabilityProfile& profile, int K, int r) {
  const int N = 1 << profile.n;
  if (static_cast<int>(profile.pe.size()) != N) {
    throw std::invalid_argument("build_code_spec: profile length mismatch");
  }
  if (K > N || K < 1) throw std::invalid_argument("build_code_spec: need 1 <= K <= N");
  if (r < 0 || r >= K) throw std::invalid_argument("build_code_spec: need 0 <= r < K");

  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (profile.pe[a] != profile.pe[b]) return profile.pe[a] < profile.pe[b];
    return a > b;
  });

  PolarCodeSpec spec;
  spec.n = profile.n;
  spec.block_length = N;
  spec.info_count = K;
  spec.crc_bits = r;
  spec.design_snr_db = profile.design_snr_db;
  spec.info_set.assign(order.begin(), order.begin() + K);
  std::sort(spec.info_set.begin(), spec.info_set.end());
  spec.frozen.assign(N, 1);
  for (int i : spec.info_set) spec.frozen[i] = 0;
  return spec;
}

SePartition partition_selective_expansion(const PolarCodeSpec& spec,
                                          const ReliabilityProfile& profile,
                                          double eta) {
  if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("partition: need 0 <= eta <= 1");
  if (static_cast<int>(profile.pe.size()) != spec.block_length) {
    throw std::invalid_argument("partition: profile/spec mismatch");
  }
  double max_pe = 0.0;
  for (int i : spec.info_set) max_pe = std::max(max_pe, profile.pe[i]);
  const double threshold = eta * max_pe;

  SePartition part;
  part.eta = eta;
  part.is_unreliable.assign(spec.block_length, 0);
  for (int i : spec.info_set) {
    if (profile.pe[i] >= threshold) {
      part.unreliable_set.push_back(i);
      part.is_unreliable[i] = 1;
    } else {
      part.reliable_set.push_back(i);
    }
  }
  return part;
}

std::vector<SubtreeCounts> subtree_profile(const PolarCodeSpec& spec,
                                           const SePartition& part, int m) {
  if (m < 0 || m > spec.n) throw std::invalid_argument("subtree_profile: need 0 <= m <= n");
  const int M = 1 << m;
  std::vector<SubtreeCounts> blocks(spec.block_length / M);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    SubtreeCounts& c = blocks[b];
    c.size = M;
    for (int j = 0; j < M; ++j) {
      const int leaf = static_cast<int>(b) * M + j;
      if (spec.frozen[leaf]) ++c.frozen;
      else if (part.is_unreliable[leaf]) ++c.unreliable;
      else ++c.reliable;
    }
  }
  return blocks;
}

void write_code_spec_file(const PolarCodeSpec& spec, double eta, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code spec file: " + path);
  out << "n=" << spec.n << "\n";
  out << "K=" << spec.info_count << "\n";
  out << "r=" << spec.crc_bits << "\n";
  out << "design_snr_db=" << spec.design_snr_db << "\n";
  out << "eta=" << eta << "\n";
  out << "info_set=";
  for (std::size_t i = 0; i < spec.info_set.size(); ++i) {
    if (i) out << ",";
    out << spec.info_set[i];
  }
  out << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

PolarCodeSpec read_code_spec_file(const std::string& path, double* eta_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read code spec file: " + path);
  PolarCodeSpec spec;
  double eta = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto pos = line.find('=');
    if (pos == std::string::npos) throw std::runtime_error("bad code spec line: " + line);
    const std::string key = line.substr(0, pos);
    const std::string value = line.substr(pos + 1);
    if (key == "n") spec.n = std::stoi(value);
    else if (key == "K") spec.info_count = std::stoi(value);
    else if (key == "r") spec.crc_bits = std::stoi(value);
    else if (key == "design_snr_db") spec.design_snr_db = std::stod(value);
    else if (key == "eta") eta = std::stod(value);
    else if (key == "info_set") {
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) spec.info_set.push_back(std::stoi(tok));
    } else {
      throw std::runtime_error("unknown code spec key: " + key);
    }
  }
  spec.block_length = 1 << spec.n;
  if (static_cast<int>(spec.info_set.size()) != spec.info_count) {
    throw std::runtime_error("code spec file: info_set size does not match K");
  }
  spec.frozen.assign(spec.block_length, 1);
  for (int i : spec.info_set) {
    if (i < 0 || i >= spec.block_length) throw std::runtime_error("code spec file: index out of range");
    spec.frozen[i] = 0;
  }
  if (eta_out) *eta_out = eta;
  return spec;
}

}  // namespace polar
