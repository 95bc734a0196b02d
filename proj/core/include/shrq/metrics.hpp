#pragma once

#include <vector>

#include "shrq/cdf_tables.hpp"
#include "shrq/channel.hpp"
#include "shrq/gamma.hpp"

namespace shrq {

// Unifies the closed-form RTD route and the empirical-table route behind
// the per-m CDFs the outage formulas consume.
class CdfProvider {
 public:
  virtual ~CdfProvider() = default;
  virtual int max_tx() const = 0;
  // Pr{ accumulated main-channel MI after m transmissions < r }
  virtual double cdf_main(int m, double r) const = 0;
  // Pr{ accumulated eavesdropper MI after m transmissions > r }
  virtual double ccdf_eve(int m, double r) const = 0;
};

class AnalyticRtdProvider final : public CdfProvider {
 public:
  explicit AnalyticRtdProvider(const SystemParams& params);
  int max_tx() const override { return params_.max_tx; }
  double cdf_main(int m, double r) const override;
  double ccdf_eve(int m, double r) const override;

 private:
  SystemParams params_;
};

class EmpiricalCdfProvider final : public CdfProvider {
 public:
  explicit EmpiricalCdfProvider(const CdfTables& tables) : tables_(&tables) {}
  int max_tx() const override { return tables_->max_tx(); }
  double cdf_main(int m, double r) const override;
  double ccdf_eve(int m, double r) const override;
  const CdfTables& tables() const { return *tables_; }

 private:
  const CdfTables* tables_;  // non-owning; tables outlive the provider
};

struct TransmissionPmf {
  std::vector<double> probs;  // probs[m-1] = Pr{session uses m transmissions}
};

struct ThroughputReport {
  WynerRates rates;
  double eta;
  double pe;
  double ps;
  double expected_m;
};

/// Stopping-time distribution of a HARQ session with main-channel code
/// rate r0; the final bin absorbs decoding failures.
TransmissionPmf pmf_transmissions(const CdfProvider& provider, double r0);

double connection_outage(const CdfProvider& provider, double r0);

double secrecy_outage(const CdfProvider& provider, const WynerRates& rates);

/// E[M] = 1 + sum_{m=1..M} Pr{I(m) < r0} (renewal length in slots).
double expected_transmissions(const CdfProvider& provider, double r0);

/// Renewal-reward secrecy throughput M*rs*(1-pe)/E[M], bits/channel use.
double throughput(const WynerRates& rates, double pe, double expected_m,
                  int max_tx);

/// Bundles pe, ps, E[M] and eta for one rate pair.
ThroughputReport evaluate_rates(const CdfProvider& provider,
                                const WynerRates& rates);

}  // namespace shrq
