#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polar/construction.hpp"

namespace polar {

// Architecture knobs of the cycle-count model: L decoding paths, L_beta LLR
// memory banks, P processing elements per group, epsilon the stage split
// between the shared parallel-F serial-G fabric and the per-path parallel
// low-stage hardware, m the list-management subtree depth. c_mbd and c_sort
// are the per-block list-management pipeline constants.
struct ArchParams {
  int list_size = 32;  // L
  int l_beta = 4;
  int pe_width = 128;  // P
  int epsilon = 3;
  int m = 2;
  uint64_t c_mbd = 1;
  uint64_t c_sort = 1;

  void validate(int n) const;
};

enum class NodeKind { F, G };

// Cycles of one kernel batch read from stage s (2^(s-1) kernels).
// PFSG fabric: F serves L_beta paths per cycle, G walks the L paths one by
// one. Kernel batches whose outputs land at stages 1..epsilon instead run on
// the per-path parallel hardware, one batch for all paths at once.
uint64_t node_cost(int stage, NodeKind kind, const ArchParams& arch);

// Full depth-first traversal of a single-path decoder with P-wide kernels;
// the reference denominator for the PFSG latency ratio.
uint64_t scd_latency(const PolarCodeSpec& spec, int pe_width);

struct LatencyRow {
  int stage = 0;
  std::string kind;  // "F", "G", "MBD", "SORT"
  uint64_t cycles = 0;
};

struct LatencyReport {
  uint64_t total = 0;
  uint64_t f_cycles = 0;
  uint64_t g_cycles = 0;
  uint64_t mbd_cycles = 0;
  uint64_t sort_cycles = 0;
  std::vector<LatencyRow> rows;
};

// Cycle count of the list decoder: tree traversal truncated at stage m, plus
// per-block list management (c_mbd each, plus max(1, 2^M_u - 1) serialized
// sorter rounds times c_sort whenever a block expands).
LatencyReport pfsg_lscd_latency(const PolarCodeSpec& spec, const SePartition& part,
                                const ArchParams& arch);

void print_latency_table(const LatencyReport& report, std::ostream& out);
void write_latency_csv(const LatencyReport& report, const std::string& path);

}  // namespace polar
