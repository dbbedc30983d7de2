#include "polar/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polar/channel.hpp"
#include "polar/codec.hpp"
#include "polar/fixedpoint.hpp"
#include "polar/lclm.hpp"
#include "polar/list_decoder.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {
namespace {

constexpr uint64_t kTrialBatch = 256;

DecoderKind parse_decoder(const std::string& s) {
  if (s == "sc") return DecoderKind::sc;
  if (s == "lscd") return DecoderKind::lscd;
  if (s == "lclm") return DecoderKind::lclm;
  if (s == "se") return DecoderKind::se;
  throw std::invalid_argument("unknown decoder: " + s + " (want sc|lscd|lclm|se)");
}

QuantMode parse_quant(const std::string& s) {
  if (s == "float") return QuantMode::flt;
  if (s == "fixed") return QuantMode::fixed;
  throw std::invalid_argument("unknown quantization: " + s + " (want float|fixed)");
}

bool parse_bool(const std::string& s) {
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw std::invalid_argument("bad boolean value: " + s);
}

struct TrialOutcome {
  uint64_t block_error = 0;
  uint64_t crc_fail = 0;
  uint64_t undetected = 0;
  uint64_t crc_fail_payload_ok = 0;
};

template <class Arith>
TrialOutcome decode_and_compare(const Arith& ar,
                                const std::vector<typename Arith::llr_t>& llrs,
                                const SimConfig& cfg, const PreparedCode& code,
                                const BitVector& sent_payload) {
  BitVector payload;
  bool crc_ok = false;
  switch (cfg.decoder) {
    case DecoderKind::sc: {
      const BitVector u = decode_sc(ar, std::span<const typename Arith::llr_t>(llrs), code.spec);
      PayloadView view = extract_payload(u, code.spec);
      payload = std::move(view.payload);
      crc_ok = view.crc_ok;
      break;
    }
    case DecoderKind::lscd: {
      const auto list = decode_lscd_bitwise(ar, std::span<const typename Arith::llr_t>(llrs),
                                            code.spec, cfg.list_size);
      auto sel = select_output(list, code.spec);
      payload = std::move(sel.payload);
      crc_ok = sel.status == CrcStatus::pass;
      break;
    }
    case DecoderKind::lclm:
    case DecoderKind::se: {
      const auto list =
          decode_lscd_lclm(ar, std::span<const typename Arith::llr_t>(llrs), code.spec,
                           code.part, cfg.list_size, cfg.m, cfg.decoder == DecoderKind::se);
      auto sel = select_output(list, code.spec);
      payload = std::move(sel.payload);
      crc_ok = sel.status == CrcStatus::pass;
      break;
    }
  }
  TrialOutcome out;
  const bool wrong = payload != sent_payload;
  out.block_error = wrong;
  out.crc_fail = !crc_ok;
  out.undetected = (crc_ok && wrong) ? 1 : 0;
  out.crc_fail_payload_ok = (!crc_ok && !wrong) ? 1 : 0;
  return out;
}

TrialOutcome simulate_trial(const SimConfig& cfg, const PreparedCode& code,
                            std::size_t snr_index, uint64_t trial) {
  GaussianRng rng(mix_seed(cfg.seed, snr_index, trial));
  const int payload_len = cfg.K - cfg.r;
  BitVector payload(payload_len);
  for (int i = 0; i < payload_len; ++i) payload[i] = rng.bit();
  const BitVector x = encode(payload, code.spec);
  const double sigma = awgn_sigma(cfg.snr_dbs[snr_index]);
  const ChannelObservation obs = bpsk_modulate(x, sigma, rng, cfg.noiseless);
  const std::vector<double> llrs = channel_llr(obs);
  if (cfg.quant == QuantMode::flt) {
    return decode_and_compare(FloatArith{}, llrs, cfg, code, payload);
  }
  std::vector<int32_t> fixed(llrs.size());
  for (std::size_t i = 0; i < llrs.size(); ++i) fixed[i] = quantize_llr(llrs[i], cfg.q, cfg.llr_scale);
  return decode_and_compare(FixedArith(cfg.q, cfg.q_pm), fixed, cfg, code, payload);
}

void accumulate(BlerPoint& point, const TrialOutcome& o) {
  point.block_errors += o.block_error;
  point.crc_fail_blocks += o.crc_fail;
  point.undetected_errors += o.undetected;
  point.crc_fail_payload_ok += o.crc_fail_payload_ok;
}

BlerPoint finish_point(BlerPoint point, double snr_db,
                       std::chrono::steady_clock::time_point t0) {
  point.snr_db = snr_db;
  point.bler = point.trials ? static_cast<double>(point.block_errors) / point.trials : 0.0;
  point.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return point;
}

}  // namespace

void SimConfig::validate() const {
  if (n < 1 || n > 20) throw std::invalid_argument("config: need 1 <= n <= 20");
  const int N = 1 << n;
  if (K < 1 || K > N) throw std::invalid_argument("config: need 1 <= K <= 2^n");
  if (r != 0 && r != 24) throw std::invalid_argument("config: r must be 0 or 24");
  if (r >= K) throw std::invalid_argument("config: need r < K");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("config: need 0 <= eta <= 1");
  if (m < 0 || m > n) throw std::invalid_argument("config: need 0 <= m <= n");
  if (list_size < 1) throw std::invalid_argument("config: list_size must be >= 1");
  if (q < 2 || q > 30) throw std::invalid_argument("config: need 2 <= q <= 30");
  if (q_pm < 1 || q_pm > 32) throw std::invalid_argument("config: need 1 <= q_pm <= 32");
  if (!(llr_scale > 0.0)) throw std::invalid_argument("config: llr_scale must be positive");
  if (snr_dbs.empty()) throw std::invalid_argument("config: snr_dbs must be non-empty");
  for (double s : snr_dbs) {
    if (!std::isfinite(s)) throw std::invalid_argument("config: SNR values must be finite");
  }
  if (max_trials < 1) throw std::invalid_argument("config: max_trials must be >= 1");
  if (min_block_errors < 1) throw std::invalid_argument("config: min_block_errors must be >= 1");
  arch.validate(n);
}

SimConfig parse_sim_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config: " + path);
  SimConfig cfg;
  cfg.snr_dbs.clear();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto pos = line.find('=');
    if (pos == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, pos);
    const std::string value = line.substr(pos + 1);
    if (key == "n") cfg.n = std::stoi(value);
    else if (key == "k" || key == "K") cfg.K = std::stoi(value);
    else if (key == "r") cfg.r = std::stoi(value);
    else if (key == "design_snr_db") cfg.design_snr_db = std::stod(value);
    else if (key == "eta") cfg.eta = std::stod(value);
    else if (key == "m") cfg.m = std::stoi(value);
    else if (key == "decoder") cfg.decoder = parse_decoder(value);
    else if (key == "list_size") cfg.list_size = std::stoi(value);
    else if (key == "quant") cfg.quant = parse_quant(value);
    else if (key == "q") cfg.q = std::stoi(value);
    else if (key == "q_pm") cfg.q_pm = std::stoi(value);
    else if (key == "llr_scale") cfg.llr_scale = std::stod(value);
    else if (key == "snr_dbs") {
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.snr_dbs.push_back(std::stod(tok));
    } else if (key == "max_trials") cfg.max_trials = std::stoull(value);
    else if (key == "min_block_errors") cfg.min_block_errors = std::stoull(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "noiseless") cfg.noiseless = parse_bool(value);
    else if (key == "spec_file") cfg.spec_file = value;
    else if (key == "l_beta") cfg.arch.l_beta = std::stoi(value);
    else if (key == "p") cfg.arch.pe_width = std::stoi(value);
    else if (key == "epsilon") cfg.arch.epsilon = std::stoi(value);
    else if (key == "c_mbd") cfg.arch.c_mbd = std::stoull(value);
    else if (key == "c_sort") cfg.arch.c_sort = std::stoull(value);
    else throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
  }
  cfg.arch.list_size = cfg.list_size;
  cfg.arch.m = cfg.m;
  return cfg;
}

PreparedCode prepare_code(const SimConfig& cfg) {
  cfg.validate();
  PreparedCode code;
  const ReliabilityProfile profile = gaussian_approx_reliabilities(cfg.n, cfg.design_snr_db);
  if (!cfg.spec_file.empty()) {
    code.spec = read_code_spec_file(cfg.spec_file);
    if (code.spec.n != cfg.n || code.spec.info_count != cfg.K || code.spec.crc_bits != cfg.r) {
      throw std::invalid_argument("spec_file does not match the configured n/K/r");
    }
  } else {
    code.spec = build_code_spec(profile, cfg.K, cfg.r);
  }
  code.part = partition_selective_expansion(code.spec, profile, cfg.eta);
  return code;
}

BlerPoint run_point(const SimConfig& cfg, const PreparedCode& code, std::size_t snr_index,
                    int num_threads) {
  const auto t0 = std::chrono::steady_clock::now();
  BlerPoint point;
#ifdef _OPENMP
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
#else
  const int threads = 1;
  (void)num_threads;
#endif
  while (point.trials < cfg.max_trials && point.block_errors < cfg.min_block_errors) {
    const uint64_t batch = std::min<uint64_t>(kTrialBatch, cfg.max_trials - point.trials);
    uint64_t err = 0, cf = 0, ud = 0, cfok = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : err, cf, ud, cfok) \
    num_threads(threads) if (threads > 1)
#endif
    for (int64_t t = 0; t < static_cast<int64_t>(batch); ++t) {
      const TrialOutcome o = simulate_trial(cfg, code, snr_index, point.trials + t);
      err += o.block_error;
      cf += o.crc_fail;
      ud += o.undetected;
      cfok += o.crc_fail_payload_ok;
    }
    point.block_errors += err;
    point.crc_fail_blocks += cf;
    point.undetected_errors += ud;
    point.crc_fail_payload_ok += cfok;
    point.trials += batch;
  }
  return finish_point(point, cfg.snr_dbs[snr_index], t0);
}

BlerPoint run_point_serial(const SimConfig& cfg, const PreparedCode& code,
                           std::size_t snr_index) {
  const auto t0 = std::chrono::steady_clock::now();
  BlerPoint point;
  while (point.trials < cfg.max_trials && point.block_errors < cfg.min_block_errors) {
    const uint64_t batch = std::min<uint64_t>(kTrialBatch, cfg.max_trials - point.trials);
    for (uint64_t t = 0; t < batch; ++t) {
      accumulate(point, simulate_trial(cfg, code, snr_index, point.trials + t));
    }
    point.trials += batch;
  }
  return finish_point(point, cfg.snr_dbs[snr_index], t0);
}

std::vector<BlerPoint> run_sweep(const SimConfig& cfg, const PreparedCode& code,
                                 const std::string& csv_path, int num_threads, bool quiet) {
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot write output csv: " + csv_path);
  std::ofstream gp(csv_path + ".gp");
  if (!gp) throw std::runtime_error("cannot write gnuplot file: " + csv_path + ".gp");
  csv << "snr_db,trials,block_errors,bler,seed\n";
  const double eb_offset = -10.0 * std::log10(code.spec.rate());
  gp << "# snr_es_db  bler   (Eb/N0 = Es/N0 + " << eb_offset << " dB at rate "
     << code.spec.rate() << ")\n";

  std::vector<BlerPoint> points;
  char buf[160];
  for (std::size_t i = 0; i < cfg.snr_dbs.size(); ++i) {
    const BlerPoint p = run_point(cfg, code, i, num_threads);
    std::snprintf(buf, sizeof(buf), "%.4f,%llu,%llu,%.8e,%llu\n", p.snr_db,
                  static_cast<unsigned long long>(p.trials),
                  static_cast<unsigned long long>(p.block_errors), p.bler,
                  static_cast<unsigned long long>(cfg.seed));
    csv << buf;
    csv.flush();
    std::snprintf(buf, sizeof(buf), "%.4f %.8e\n", p.snr_db, p.bler);
    gp << buf;
    gp.flush();
    if (!quiet) {
      std::snprintf(buf, sizeof(buf),
                    "snr=%.3f dB (Eb/N0=%.3f) trials=%llu errors=%llu bler=%.3e "
                    "crc_fail=%llu undetected=%llu [%.1f s]\n",
                    p.snr_db, p.snr_db + eb_offset, static_cast<unsigned long long>(p.trials),
                    static_cast<unsigned long long>(p.block_errors), p.bler,
                    static_cast<unsigned long long>(p.crc_fail_blocks),
                    static_cast<unsigned long long>(p.undetected_errors), p.wall_seconds);
      std::fputs(buf, stdout);
      std::fflush(stdout);
    }
    points.push_back(p);
  }
  if (!csv) throw std::runtime_error("write failed: " + csv_path);
  return points;
}

std::vector<CsvPoint> read_bler_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read csv: " + path);
  std::vector<CsvPoint> points;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    std::stringstream ss(line);
    std::string tok;
    CsvPoint p;
    std::getline(ss, tok, ',');
    p.snr_db = std::stod(tok);
    std::getline(ss, tok, ',');
    p.trials = std::stoull(tok);
    std::getline(ss, tok, ',');
    p.block_errors = std::stoull(tok);
    points.push_back(p);
  }
  std::sort(points.begin(), points.end(),
            [](const CsvPoint& a, const CsvPoint& b) { return a.snr_db < b.snr_db; });
  return points;
}

double interpolate_snr_at_bler(const std::vector<CsvPoint>& curve, double target_bler) {
  if (!(target_bler > 0.0)) throw std::invalid_argument("target BLER must be positive");
  std::vector<std::pair<double, double>> pts;  // (snr, log10 bler), bler > 0 only
  for (const CsvPoint& p : curve) {
    if (p.trials == 0 || p.block_errors == 0) continue;
    pts.emplace_back(p.snr_db, std::log10(static_cast<double>(p.block_errors) / p.trials));
  }
  const double ty = std::log10(target_bler);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto [x0, y0] = pts[i];
    const auto [x1, y1] = pts[i + 1];
    if ((y0 >= ty && ty >= y1) || (y1 >= ty && ty >= y0)) {
      if (y0 == y1) return x0;
      return x0 + (x1 - x0) * (ty - y0) / (y1 - y0);
    }
  }
  throw std::runtime_error("no-overlap: curve does not bracket the target BLER");
}

CompareResult compare_runs(const std::string& csv_a, const std::string& csv_b,
                           double target_bler) {
  CompareResult result;
  result.snr_a = interpolate_snr_at_bler(read_bler_csv(csv_a), target_bler);
  result.snr_b = interpolate_snr_at_bler(read_bler_csv(csv_b), target_bler);
  result.gap_db = result.snr_b - result.snr_a;
  return result;
}

bool bler_significantly_less(uint64_t errors_a, uint64_t trials_a, uint64_t errors_b,
                             uint64_t trials_b, double z_threshold) {
  if (trials_a == 0 || trials_b == 0) return false;
  const double pa = static_cast<double>(errors_a) / trials_a;
  const double pb = static_cast<double>(errors_b) / trials_b;
  const double pooled =
      static_cast<double>(errors_a + errors_b) / static_cast<double>(trials_a + trials_b);
  const double se =
      std::sqrt(pooled * (1.0 - pooled) * (1.0 / trials_a + 1.0 / trials_b));
  if (!(se > 0.0)) return false;
  return (pb - pa) / se >= z_threshold;
}

}  // namespace polar
