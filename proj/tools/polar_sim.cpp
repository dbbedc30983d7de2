// Command-line front end: Monte-Carlo BLER sweeps, the decoder cycle-count
// model, and SNR-gap comparison between two BLER curves.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polar/construction.hpp"
#include "polar/latency.hpp"
#include "polar/sim.hpp"

namespace {

int cmd_simulate(const std::string& config_path, const std::string& out_csv,
                 const std::string& seed_override, const std::string& decoder_override,
                 const std::string& quant_override, const std::string& dump_spec,
                 int threads) {
  polar::SimConfig cfg = polar::parse_sim_config_file(config_path);
  if (!seed_override.empty()) cfg.seed = std::stoull(seed_override);
  if (!decoder_override.empty()) {
    if (decoder_override == "sc") cfg.decoder = polar::DecoderKind::sc;
    else if (decoder_override == "lscd") cfg.decoder = polar::DecoderKind::lscd;
    else if (decoder_override == "lclm") cfg.decoder = polar::DecoderKind::lclm;
    else if (decoder_override == "se") cfg.decoder = polar::DecoderKind::se;
    else throw std::invalid_argument("unknown --decoder: " + decoder_override);
  }
  if (!quant_override.empty()) {
    if (quant_override == "float") cfg.quant = polar::QuantMode::flt;
    else if (quant_override == "fixed") cfg.quant = polar::QuantMode::fixed;
    else throw std::invalid_argument("unknown --quant: " + quant_override);
  }
  const polar::PreparedCode code = polar::prepare_code(cfg);
  if (!dump_spec.empty()) polar::write_code_spec_file(code.spec, cfg.eta, dump_spec);
  polar::run_sweep(cfg, code, out_csv, threads);
  return 0;
}

int cmd_latency(const std::string& config_path, const std::string& csv_out) {
  polar::SimConfig cfg = polar::parse_sim_config_file(config_path);
  const polar::PreparedCode code = polar::prepare_code(cfg);
  const polar::LatencyReport report = polar::pfsg_lscd_latency(code.spec, code.part, cfg.arch);
  polar::print_latency_table(report, std::cout);
  const uint64_t scd = polar::scd_latency(code.spec, cfg.arch.pe_width);
  std::printf("single-path SCD reference: %llu cycles (ratio %.3f)\n",
              static_cast<unsigned long long>(scd),
              static_cast<double>(report.total) / static_cast<double>(scd));
  if (!csv_out.empty()) polar::write_latency_csv(report, csv_out);
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, double target_bler) {
  const polar::CompareResult res = polar::compare_runs(a, b, target_bler);
  std::printf("SNR@%g: A=%.4f dB  B=%.4f dB  gap(B-A)=%.4f dB\n", target_bler, res.snr_a,
              res.snr_b, res.gap_db);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CRC-aided polar list decoding simulation toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_csv, seed_override, decoder_override, quant_override, dump_spec;
  int threads = 0;
  auto* sim = app.add_subcommand("simulate", "run a Monte-Carlo BLER sweep");
  sim->add_option("--config", config_path, "key=value config file")->required();
  sim->add_option("--out", out_csv, "output CSV path")->required();
  sim->add_option("--seed", seed_override, "override the base seed");
  sim->add_option("--decoder", decoder_override, "override the decoder (sc|lscd|lclm|se)");
  sim->add_option("--quant", quant_override, "override the arithmetic (float|fixed)");
  sim->add_option("--dump-spec", dump_spec, "write the resolved code spec to a file");
  sim->add_option("--threads", threads, "worker threads (0 = all, 1 = serial)");

  std::string lat_config, lat_csv;
  auto* lat = app.add_subcommand("latency", "print the decoder cycle-count model");
  lat->add_option("--config", lat_config, "key=value config file")->required();
  lat->add_option("--csv", lat_csv, "also write stage,kind,cycles rows to a CSV");

  std::string cmp_a, cmp_b;
  double target_bler = 1e-3;
  auto* cmp = app.add_subcommand("compare", "SNR gap between two BLER curves");
  cmp->add_option("--a", cmp_a, "first curve CSV")->required();
  cmp->add_option("--b", cmp_b, "second curve CSV")->required();
  cmp->add_option("--target-bler", target_bler, "BLER at which to compare (default 1e-3)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return cmd_simulate(config_path, out_csv, seed_override, decoder_override,
                          quant_override, dump_spec, threads);
    }
    if (lat->parsed()) return cmd_latency(lat_config, lat_csv);
    if (cmp->parsed()) return cmd_compare(cmp_a, cmp_b, target_bler);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
