// Command-line driver: reproduces the tradeoff curves as CSV and exposes
// feasibility queries and raw protocol simulation.

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shrq/shrq.hpp"

namespace {

using namespace shrq;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitInfeasible = 3;

struct CommonOptions {
  std::string protocol = "both";
  int max_tx = 8;
  double snr_main_db = 15.0;
  double snr_eve_db = 5.0;
  double xi_s = 1e-3;
  double xi_e = 0.0;
  bool xi_e_set = false;
  std::size_t samples = 1'000'000;
  std::size_t sessions = 1'000'000;
  std::uint64_t seed = 12345;
  double r0_min = 0.02;
  double r0_max = 4.0;
  int r0_steps = 400;
  std::string out = "-";
};

void add_common_options(CLI::App& cmd, CommonOptions& opt) {
  cmd.add_option("--protocol", opt.protocol, "rtd, inr, or both")
      ->check(CLI::IsMember({"rtd", "inr", "both"}));
  cmd.add_option("--max-tx", opt.max_tx, "maximum transmissions per session")
      ->check(CLI::Range(1, kMaxTxCeiling));
  cmd.add_option("--snr-main-db", opt.snr_main_db, "main channel average SNR [dB]");
  cmd.add_option("--snr-eve-db", opt.snr_eve_db, "eavesdropper average SNR [dB]");
  cmd.add_option("--xi-s", opt.xi_s, "secrecy outage target")
      ->check(CLI::Range(1e-12, 1.0));
  cmd.add_option("--xi-e", opt.xi_e, "connection outage target (optional)")
      ->check(CLI::Range(1e-12, 1.0));
  cmd.add_option("--samples", opt.samples, "Monte-Carlo samples for empirical CDFs");
  cmd.add_option("--sessions", opt.sessions, "simulated HARQ sessions");
  cmd.add_option("--seed", opt.seed, "random seed");
  cmd.add_option("--r0-min", opt.r0_min, "lower end of the r0 sweep");
  cmd.add_option("--r0-max", opt.r0_max, "upper end of the r0 sweep");
  cmd.add_option("--r0-steps", opt.r0_steps, "grid points for r0")
      ->check(CLI::Range(2, 100000));
  cmd.add_option("--out", opt.out, "output CSV path ('-' for stdout)");
}

SystemParams system_params(const CommonOptions& opt) {
  return SystemParams{opt.max_tx, FadingSpec{db_to_linear(opt.snr_main_db)},
                      FadingSpec{db_to_linear(opt.snr_eve_db)}};
}

std::vector<Protocol> selected_protocols(const CommonOptions& opt) {
  if (opt.protocol == "rtd") return {Protocol::Rtd};
  if (opt.protocol == "inr") return {Protocol::Inr};
  return {Protocol::Rtd, Protocol::Inr};
}

const char* protocol_name(Protocol p) {
  return p == Protocol::Rtd ? "rtd" : "inr";
}

// Analytic gamma-CDF route for RTD, shared Monte-Carlo tables for INR.
struct ProviderBundle {
  std::optional<CdfTables> tables;
  std::unique_ptr<CdfProvider> provider;
};

ProviderBundle make_provider(Protocol protocol, const SystemParams& params,
                             std::size_t samples, std::uint64_t seed) {
  ProviderBundle bundle;
  if (protocol == Protocol::Rtd) {
    bundle.provider = std::make_unique<AnalyticRtdProvider>(params);
  } else {
    bundle.tables = build_cdf_tables(params, Protocol::Inr, samples, seed);
    bundle.provider = std::make_unique<EmpiricalCdfProvider>(*bundle.tables);
  }
  return bundle;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_);
      if (!file_)
        throw std::runtime_error("cannot open output file: " + path_);
    }
  }

  void header(const std::vector<std::string>& columns) { row_strings(columns); }

  void field(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    fields_.push_back(buf);
  }
  void field(const std::string& s) { fields_.push_back(s); }
  void field(int v) { fields_.push_back(std::to_string(v)); }

  void end_row() {
    row_strings(fields_);
    fields_.clear();
  }

  void finish() {
    if (path_ != "-") {
      file_.flush();
      if (!file_)
        throw std::runtime_error("write failed on output file: " + path_);
    }
  }

 private:
  void row_strings(const std::vector<std::string>& cells) {
    std::ostream& os = path_ == "-" ? std::cout : file_;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
    if (path_ != "-" && !file_)
      throw std::runtime_error("write failed on output file: " + path_);
  }

  std::string path_;
  std::ofstream file_;
  std::vector<std::string> fields_;
};

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * i / (points - 1);
  return grid;
}

SearchConfig search_config(const CommonOptions& opt) {
  SearchConfig config;
  config.r0_max = opt.r0_max;
  config.r0_grid_points = opt.r0_steps;
  config.rs_bisect_tol = 1e-4;
  config.mc_samples = opt.samples;
  config.seed = opt.seed;
  return config;
}

OutageConstraints constraints_for(const CommonOptions& opt, double xi_s) {
  OutageConstraints c;
  c.xi_s = xi_s;
  if (opt.xi_e_set) c.xi_e = opt.xi_e;
  return c;
}

int cmd_throughput_vs_r0(const CommonOptions& opt, bool xi_s_given) {
  const SystemParams params = system_params(opt);
  std::vector<double> xi_s_values{1.0, 1e-2, 1e-4};
  if (xi_s_given) xi_s_values = {opt.xi_s};

  CsvWriter csv(opt.out);
  csv.header({"protocol", "xi_s", "r0", "rs_star", "eta"});
  bool any_positive = false;
  for (Protocol protocol : selected_protocols(opt)) {
    const ProviderBundle bundle =
        make_provider(protocol, params, opt.samples, opt.seed);
    for (double xi_s : xi_s_values) {
      for (double r0 : linspace(opt.r0_min, opt.r0_max, opt.r0_steps)) {
        const double rs =
            max_rs_given_r0(*bundle.provider, r0, xi_s, 1e-4);
        const ThroughputReport report =
            evaluate_rates(*bundle.provider, WynerRates{r0, rs});
        any_positive = any_positive || report.eta > 0.0;
        csv.field(std::string(protocol_name(protocol)));
        csv.field(xi_s);
        csv.field(r0);
        csv.field(rs);
        csv.field(report.eta);
        csv.end_row();
      }
    }
  }
  csv.finish();
  return any_positive ? kExitOk : kExitInfeasible;
}

int cmd_pe_vs_r0(const CommonOptions& opt) {
  const SystemParams params = system_params(opt);
  CsvWriter csv(opt.out);
  csv.header({"protocol", "r0", "pe"});
  for (Protocol protocol : selected_protocols(opt)) {
    const ProviderBundle bundle =
        make_provider(protocol, params, opt.samples, opt.seed);
    for (double r0 : linspace(opt.r0_min, opt.r0_max, opt.r0_steps)) {
      csv.field(std::string(protocol_name(protocol)));
      csv.field(r0);
      csv.field(connection_outage(*bundle.provider, r0));
      csv.end_row();
    }
  }
  csv.finish();
  return kExitOk;
}

int cmd_throughput_vs_xis(const CommonOptions& opt, double xis_min,
                          double xis_max, int xis_points) {
  const SystemParams params = system_params(opt);
  std::vector<double> xis_values(static_cast<std::size_t>(xis_points));
  for (int i = 0; i < xis_points; ++i)
    xis_values[static_cast<std::size_t>(i)] =
        xis_min * std::pow(xis_max / xis_min,
                           xis_points == 1 ? 0.0
                                           : static_cast<double>(i) /
                                                 (xis_points - 1));

  CsvWriter csv(opt.out);
  csv.header({"protocol", "xi_s", "r0_star", "rs_star", "eta", "pe", "ps"});
  bool any_positive = false;
  for (Protocol protocol : selected_protocols(opt)) {
    const ProviderBundle bundle =
        make_provider(protocol, params, opt.samples, opt.seed);
    for (double xi_s : xis_values) {
      const ThroughputReport report = optimize(
          *bundle.provider, constraints_for(opt, xi_s), search_config(opt));
      any_positive = any_positive || report.eta > 0.0;
      csv.field(std::string(protocol_name(protocol)));
      csv.field(xi_s);
      csv.field(report.rates.r0);
      csv.field(report.rates.rs);
      csv.field(report.eta);
      csv.field(report.pe);
      csv.field(report.ps);
      csv.end_row();
    }
  }
  csv.finish();
  return any_positive ? kExitOk : kExitInfeasible;
}

int cmd_throughput_vs_snr(const CommonOptions& opt, double snr_min_db,
                          double snr_max_db, double snr_step_db) {
  CsvWriter csv(opt.out);
  csv.header({"protocol", "snr_main_db", "r0_star", "rs_star", "eta"});
  bool any_positive = false;
  for (Protocol protocol : selected_protocols(opt)) {
    for (double snr_db = snr_min_db; snr_db <= snr_max_db + 1e-9;
         snr_db += snr_step_db) {
      CommonOptions point = opt;
      point.snr_main_db = snr_db;
      const SystemParams params = system_params(point);
      const ProviderBundle bundle =
          make_provider(protocol, params, opt.samples, opt.seed);
      const ThroughputReport report = optimize(
          *bundle.provider, constraints_for(opt, opt.xi_s), search_config(opt));
      any_positive = any_positive || report.eta > 0.0;
      csv.field(std::string(protocol_name(protocol)));
      csv.field(snr_db);
      csv.field(report.rates.r0);
      csv.field(report.rates.rs);
      csv.field(report.eta);
      csv.end_row();
    }
  }
  csv.finish();
  return any_positive ? kExitOk : kExitInfeasible;
}

int cmd_throughput_vs_m(const CommonOptions& opt,
                        const std::string& m_values_arg) {
  std::vector<int> m_values;
  std::stringstream ss(m_values_arg);
  for (std::string token; std::getline(ss, token, ',');) {
    const int m = std::stoi(token);
    if (m < 1 || m > kMaxTxCeiling)
      throw CLI::ValidationError("--m-values entries must be in [1, 1024]");
    m_values.push_back(m);
  }
  if (m_values.empty())
    throw CLI::ValidationError("--m-values must not be empty");

  CsvWriter csv(opt.out);
  csv.header({"protocol", "max_tx", "r0_star", "rs_star", "eta"});
  bool any_positive = false;
  for (Protocol protocol : selected_protocols(opt)) {
    for (int m : m_values) {
      CommonOptions point = opt;
      point.max_tx = m;
      const SystemParams params = system_params(point);
      const ProviderBundle bundle =
          make_provider(protocol, params, opt.samples, opt.seed);
      const ThroughputReport report = optimize(
          *bundle.provider, constraints_for(opt, opt.xi_s), search_config(opt));
      any_positive = any_positive || report.eta > 0.0;
      csv.field(std::string(protocol_name(protocol)));
      csv.field(m);
      csv.field(report.rates.r0);
      csv.field(report.rates.rs);
      csv.field(report.eta);
      csv.end_row();
    }
  }
  csv.finish();
  return any_positive ? kExitOk : kExitInfeasible;
}

int cmd_asymptotics(const CommonOptions& opt, double r0, double rs) {
  const SystemParams params = system_params(opt);
  const ErgodicMoments moments = ergodic_moments(params.main, params.eve);
  const WynerRates rates{r0, rs};
  CsvWriter csv(opt.out);
  csv.header({"mu_main", "mu_eve", "r0", "rs", "inr_feasible", "mfb_feasible",
              "limit_rtd", "limit_inr"});
  csv.field(moments.mu_main);
  csv.field(moments.mu_eve);
  csv.field(r0);
  csv.field(rs);
  csv.field(inr_feasible(rates, params.main, params.eve) ? 1 : 0);
  csv.field(mfb_feasible(rates, params.main, params.eve) ? 1 : 0);
  csv.field(limit_throughput(Protocol::Rtd, params.main, params.eve));
  csv.field(limit_throughput(Protocol::Inr, params.main, params.eve));
  csv.end_row();
  csv.finish();
  return kExitOk;
}

int cmd_simulate(const CommonOptions& opt, double r0, double rs) {
  const SystemParams params = system_params(opt);
  const WynerRates rates{r0, rs};
  CsvWriter csv(opt.out);
  csv.header({"protocol", "source", "r0", "rs", "eta", "eta_ci", "pe", "pe_ci",
              "ps", "ps_ci", "expected_m", "expected_m_ci"});
  for (Protocol protocol : selected_protocols(opt)) {
    const EmpiricalReport sim =
        run_campaign(rates, params, protocol, opt.sessions, opt.seed);
    csv.field(std::string(protocol_name(protocol)));
    csv.field(std::string("simulated"));
    csv.field(r0);
    csv.field(rs);
    csv.field(sim.eta.value);
    csv.field(sim.eta.ci_halfwidth);
    csv.field(sim.pe.value);
    csv.field(sim.pe.ci_halfwidth);
    csv.field(sim.ps.value);
    csv.field(sim.ps.ci_halfwidth);
    csv.field(sim.expected_m.value);
    csv.field(sim.expected_m.ci_halfwidth);
    csv.end_row();

    const ProviderBundle bundle =
        make_provider(protocol, params, opt.samples, opt.seed + 1);
    const ThroughputReport model = evaluate_rates(*bundle.provider, rates);
    csv.field(std::string(protocol_name(protocol)));
    csv.field(std::string("model"));
    csv.field(r0);
    csv.field(rs);
    csv.field(model.eta);
    csv.field(0.0);
    csv.field(model.pe);
    csv.field(0.0);
    csv.field(model.ps);
    csv.field(0.0);
    csv.field(model.expected_m);
    csv.field(0.0);
    csv.end_row();
  }
  csv.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure HARQ reliability/secrecy/throughput toolkit"};
  app.require_subcommand(1);

  CommonOptions opt;
  double xis_min = 1e-6, xis_max = 1.0;
  int xis_points = 13;
  double snr_min_db = 5.0, snr_max_db = 30.0, snr_step_db = 2.5;
  std::string m_values = "1,2,4,8,16,32";
  double r0 = 0.5, rs = 0.25;

  auto* c_thr_r0 = app.add_subcommand(
      "throughput-vs-r0", "secrecy throughput against the main code rate");
  auto* c_pe_r0 = app.add_subcommand(
      "pe-vs-r0", "connection outage probability against the main code rate");
  auto* c_thr_xis = app.add_subcommand(
      "throughput-vs-xis", "optimized throughput against the secrecy target");
  auto* c_thr_snr = app.add_subcommand(
      "throughput-vs-snr", "optimized throughput against the main average SNR");
  auto* c_thr_m = app.add_subcommand(
      "throughput-vs-m", "optimized throughput against the transmission budget");
  auto* c_asym = app.add_subcommand(
      "asymptotics", "ergodic moments, feasibility verdicts, limiting throughput");
  auto* c_sim = app.add_subcommand(
      "simulate", "event-level session simulation next to the model prediction");

  for (CLI::App* cmd :
       {c_thr_r0, c_pe_r0, c_thr_xis, c_thr_snr, c_thr_m, c_asym, c_sim})
    add_common_options(*cmd, opt);

  c_thr_xis->add_option("--xis-min", xis_min, "lowest xi_s in the sweep");
  c_thr_xis->add_option("--xis-max", xis_max, "highest xi_s in the sweep");
  c_thr_xis->add_option("--xis-points", xis_points, "log-spaced sweep points")
      ->check(CLI::Range(1, 1000));
  c_thr_snr->add_option("--snr-min-db", snr_min_db, "sweep start [dB]");
  c_thr_snr->add_option("--snr-max-db", snr_max_db, "sweep end [dB]");
  c_thr_snr->add_option("--snr-step-db", snr_step_db, "sweep step [dB]")
      ->check(CLI::Range(1e-3, 100.0));
  c_thr_m->add_option("--m-values", m_values, "comma-separated list of M values");
  for (CLI::App* cmd : {c_asym, c_sim}) {
    cmd->add_option("--r0", r0, "main channel code rate");
    cmd->add_option("--rs", rs, "secrecy information rate");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitBadArgs;
  }

  opt.xi_e_set = app.get_subcommands().front()->count("--xi-e") > 0;
  const bool xi_s_given = app.get_subcommands().front()->count("--xi-s") > 0;

  try {
    if (rs > r0) throw CLI::ValidationError("--rs must not exceed --r0");
    if (c_thr_r0->parsed()) return cmd_throughput_vs_r0(opt, xi_s_given);
    if (c_pe_r0->parsed()) return cmd_pe_vs_r0(opt);
    if (c_thr_xis->parsed())
      return cmd_throughput_vs_xis(opt, xis_min, xis_max, xis_points);
    if (c_thr_snr->parsed())
      return cmd_throughput_vs_snr(opt, snr_min_db, snr_max_db, snr_step_db);
    if (c_thr_m->parsed()) return cmd_throughput_vs_m(opt, m_values);
    if (c_asym->parsed()) return cmd_asymptotics(opt, r0, rs);
    if (c_sim->parsed()) return cmd_simulate(opt, r0, rs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitBadArgs;
}
