#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/construction.hpp"
#include "polar/latency.hpp"

namespace polar {

enum class DecoderKind { sc, lscd, lclm, se };
enum class QuantMode { flt, fixed };

// One key=value file captures a full run: code, decoder, quantization, SNR
// grid, stop rule and seed.
struct SimConfig {
  int n = 10;
  int K = 512;
  int r = 24;
  double design_snr_db = 2.0;
  double eta = 0.3;
  int m = 2;

  DecoderKind decoder = DecoderKind::lclm;
  int list_size = 8;

  QuantMode quant = QuantMode::flt;
  int q = 8;
  int q_pm = 9;
  double llr_scale = 4.0;

  std::vector<double> snr_dbs;
  uint64_t max_trials = 1000000;
  uint64_t min_block_errors = 100;
  uint64_t seed = 1;
  bool noiseless = false;  // test hook: channel emits exact +-1
  std::string spec_file;   // optional: load the information set from a file

  ArchParams arch;  // latency-model knobs; arch.list_size/arch.m mirror the above

  void validate() const;  // throws std::invalid_argument
};

SimConfig parse_sim_config_file(const std::string& path);

struct PreparedCode {
  PolarCodeSpec spec;
  SePartition part;
};

PreparedCode prepare_code(const SimConfig& cfg);

struct BlerPoint {
  double snr_db = 0.0;
  uint64_t trials = 0;
  uint64_t block_errors = 0;
  uint64_t crc_fail_blocks = 0;      // trials whose selected path failed the CRC
  uint64_t undetected_errors = 0;    // payload mismatch with a CRC pass
  uint64_t crc_fail_payload_ok = 0;  // CRC fail but the payload was right
  double bler = 0.0;
  double wall_seconds = 0.0;
};

// Monte-Carlo trials at one SNR point until min_block_errors or max_trials.
// Per-trial seeds derive from (seed, snr_index, trial), and trials complete
// in fixed batches, so the counts do not depend on the number of workers.
BlerPoint run_point(const SimConfig& cfg, const PreparedCode& code, std::size_t snr_index,
                    int num_threads = 0);

// Plain-loop reference for run_point, kept for testing the parallel version.
BlerPoint run_point_serial(const SimConfig& cfg, const PreparedCode& code,
                           std::size_t snr_index);

// Sweeps the SNR grid, writes the CSV (header
// "snr_db,trials,block_errors,bler,seed") and a two-column gnuplot file at
// csv_path + ".gp". The CSV is opened before any simulation starts.
std::vector<BlerPoint> run_sweep(const SimConfig& cfg, const PreparedCode& code,
                                 const std::string& csv_path, int num_threads = 0,
                                 bool quiet = false);

struct CompareResult {
  double snr_a = 0.0;
  double snr_b = 0.0;
  double gap_db = 0.0;  // snr_b - snr_a at the target BLER
};

// Log-linear interpolation of each curve to the SNR achieving target_bler;
// throws std::runtime_error when a curve does not bracket the target.
CompareResult compare_runs(const std::string& csv_a, const std::string& csv_b,
                           double target_bler);

struct CsvPoint {
  double snr_db = 0.0;
  uint64_t trials = 0;
  uint64_t block_errors = 0;
};
std::vector<CsvPoint> read_bler_csv(const std::string& path);
double interpolate_snr_at_bler(const std::vector<CsvPoint>& curve, double target_bler);

// One-sided two-proportion z-test that the first error rate is lower.
bool bler_significantly_less(uint64_t errors_a, uint64_t trials_a, uint64_t errors_b,
                             uint64_t trials_b, double z_threshold = 1.645);

}  // namespace polar
