#include "polar/latency.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "polar/lclm.hpp"

namespace polar {

void ArchParams::validate(int n) const {
  if (list_size < 1) throw std::invalid_argument("ArchParams: L must be >= 1");
  if (l_beta < 1 || list_size % l_beta != 0) {
    throw std::invalid_argument("ArchParams: L_beta must divide L");
  }
  if (pe_width < 1) throw std::invalid_argument("ArchParams: P must be >= 1");
  if (epsilon < 0 || epsilon > n) throw std::invalid_argument("ArchParams: need 0 <= epsilon <= n");
  if (m < 0 || m > n) throw std::invalid_argument("ArchParams: need 0 <= m <= n");
}

namespace {

uint64_t kernel_cycles(int stage, int pe_width) {
  const uint64_t kernels = uint64_t(1) << (stage - 1);
  return (kernels + pe_width - 1) / pe_width;
}

// The low-stage hardware is duplicated per path, so a batch costs the same
// for all L paths together. It covers the batches producing stages 1..epsilon.
bool low_stage(int stage, const ArchParams& arch) {
  return stage >= 2 && stage - 1 <= arch.epsilon;
}

}  // namespace

uint64_t node_cost(int stage, NodeKind kind, const ArchParams& arch) {
  if (stage < 1) throw std::invalid_argument("node_cost: stage must be >= 1");
  const uint64_t base = kernel_cycles(stage, arch.pe_width);
  if (low_stage(stage, arch)) return base;
  if (kind == NodeKind::F) return base * (arch.list_size / arch.l_beta);
  return base * arch.list_size;
}

uint64_t scd_latency(const PolarCodeSpec& spec, int pe_width) {
  if (pe_width < 1) throw std::invalid_argument("scd_latency: P must be >= 1");
  uint64_t total = 0;
  for (int s = 1; s <= spec.n; ++s) {
    const uint64_t nodes = uint64_t(1) << (spec.n - s);
    total += nodes * 2 * kernel_cycles(s, pe_width);
  }
  return total;
}

LatencyReport pfsg_lscd_latency(const PolarCodeSpec& spec, const SePartition& part,
                                const ArchParams& arch) {
  arch.validate(spec.n);
  LatencyReport report;
  for (int s = spec.n; s > arch.m; --s) {
    const uint64_t nodes = uint64_t(1) << (spec.n - s);
    const uint64_t f = nodes * node_cost(s, NodeKind::F, arch);
    const uint64_t g = nodes * node_cost(s, NodeKind::G, arch);
    report.f_cycles += f;
    report.g_cycles += g;
    report.rows.push_back({s, "F", f});
    report.rows.push_back({s, "G", g});
  }
  const auto blocks = subtree_profile(spec, part, arch.m);
  for (const SubtreeCounts& blk : blocks) {
    report.mbd_cycles += arch.c_mbd;
    if (blk.unreliable >= 1) {
      report.sort_cycles += ((uint64_t(1) << blk.unreliable) - 1) * arch.c_sort;
    }
  }
  report.rows.push_back({arch.m, "MBD", report.mbd_cycles});
  report.rows.push_back({arch.m, "SORT", report.sort_cycles});
  report.total = report.f_cycles + report.g_cycles + report.mbd_cycles + report.sort_cycles;
  return report;
}

void print_latency_table(const LatencyReport& report, std::ostream& out) {
  out << "stage  kind  cycles\n";
  for (const LatencyRow& row : report.rows) {
    out << row.stage << "  " << row.kind << "  " << row.cycles << "\n";
  }
  out << "total  -  " << report.total << "\n";
  out << "breakdown: F=" << report.f_cycles << " G=" << report.g_cycles
      << " MBD=" << report.mbd_cycles << " SORT=" << report.sort_cycles << "\n";
}

void write_latency_csv(const LatencyReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write latency csv: " + path);
  out << "stage,kind,cycles\n";
  for (const LatencyRow& row : report.rows) {
    out << row.stage << "," << row.kind << "," << row.cycles << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace polar
