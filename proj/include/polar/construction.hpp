#pragma once

#include <string>
#include <vector>

#include "polar/bits.hpp"

namespace polar {

// Per-bit error probabilities of the N = 2^n source bits under genie-aided
// successive cancellation, from density evolution with the Gaussian
// approximation over the BI-AWGN channel at the design SNR (Es/N0, dB).
struct ReliabilityProfile {
  int n = 0;
  double design_snr_db = 0.0;
  std::vector<double> pe;
};

ReliabilityProfile gaussian_approx_reliabilities(int n, double design_snr_db);

struct PolarCodeSpec {
  int n = 0;
  int block_length = 0;          // N = 2^n
  int info_count = 0;            // K, includes the CRC bits
  int crc_bits = 0;              // r
  double design_snr_db = 0.0;
  std::vector<int> info_set;     // A, ascending, |A| = K
  std::vector<uint8_t> frozen;   // size N, 1 = frozen

  double rate() const { return static_cast<double>(info_count - crc_bits) / block_length; }
};

// A = indices of the K smallest pe values; pe ties go to the larger index.
PolarCodeSpec build_code_spec(const ReliabilityProfile& profile, int K, int r);

// Threshold cut of the information set by reliability: bits with
// pe >= eta * max(pe over A) expand (A_u), the rest are hard-decided (A_r).
struct SePartition {
  double eta = 0.0;
  std::vector<int> unreliable_set;     // A_u, ascending
  std::vector<int> reliable_set;       // A_r, ascending
  std::vector<uint8_t> is_unreliable;  // size N mask
};

SePartition partition_selective_expansion(const PolarCodeSpec& spec,
                                          const ReliabilityProfile& profile,
                                          double eta);

struct SubtreeCounts {
  int size = 0;        // M = 2^m leaves
  int unreliable = 0;  // M_u
  int reliable = 0;    // M_r
  int frozen = 0;
};

// Leaf-role counts for each of the N / 2^m consecutive blocks of 2^m leaves.
std::vector<SubtreeCounts> subtree_profile(const PolarCodeSpec& spec,
                                           const SePartition& part, int m);

// Plain-text key=value serialization carrying n, K, r, design_snr_db, eta and
// the explicit information set, enough to reproduce a BLER run exactly.
void write_code_spec_file(const PolarCodeSpec& spec, double eta, const std::string& path);
PolarCodeSpec read_code_spec_file(const std::string& path, double* eta_out = nullptr);

}  // namespace polar
