// Throughput of the OpenMP trial loop against the serial reference on the
// desk-scale code. Both must produce identical counters.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polar/sim.hpp"

namespace {

polar::SimConfig desk_config(uint64_t trials) {
  polar::SimConfig cfg;
  cfg.n = 10;
  cfg.K = 512;
  cfg.r = 24;
  cfg.design_snr_db = 2.0;
  cfg.eta = 0.3;
  cfg.m = 2;
  cfg.decoder = polar::DecoderKind::lclm;
  cfg.list_size = 8;
  cfg.quant = polar::QuantMode::fixed;
  cfg.snr_dbs = {2.0};
  cfg.max_trials = trials;
  cfg.min_block_errors = trials;  // run the full budget
  cfg.seed = 7;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  const uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  const polar::SimConfig cfg = desk_config(trials);
  const polar::PreparedCode code = polar::prepare_code(cfg);

  const auto t0 = std::chrono::steady_clock::now();
  const polar::BlerPoint serial = polar::run_point_serial(cfg, code, 0);
  const double serial_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto t1 = std::chrono::steady_clock::now();
  const polar::BlerPoint parallel = polar::run_point(cfg, code, 0);
  const double parallel_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::printf("N=%d K=%d r=%d L=%d lclm fixed, %llu trials at %.1f dB\n", 1 << cfg.n, cfg.K,
              cfg.r, cfg.list_size, static_cast<unsigned long long>(trials), cfg.snr_dbs[0]);
  std::printf("serial:   %8.2f trials/s  (%.2f s)\n", trials / serial_s, serial_s);
  std::printf("parallel: %8.2f trials/s  (%.2f s, %d threads)\n", trials / parallel_s,
              parallel_s, threads);
  std::printf("speedup:  %.2fx\n", serial_s / parallel_s);

  if (serial.block_errors != parallel.block_errors || serial.trials != parallel.trials) {
    std::printf("MISMATCH: serial and parallel counters differ\n");
    return 1;
  }
  std::printf("counters match: trials=%llu errors=%llu\n",
              static_cast<unsigned long long>(serial.trials),
              static_cast<unsigned long long>(serial.block_errors));
  return 0;
}
