#include "shrq/metrics.hpp"

#include <stdexcept>

namespace shrq {

AnalyticRtdProvider::AnalyticRtdProvider(const SystemParams& params)
    : params_(params) {
  validate(params_);
}

double AnalyticRtdProvider::cdf_main(int m, double r) const {
  return cdf_mi_rtd(m, params_.max_tx, params_.main, r);
}

double AnalyticRtdProvider::ccdf_eve(int m, double r) const {
  return ccdf_mi_eve_rtd(m, params_.max_tx, params_.eve, r);
}

double EmpiricalCdfProvider::cdf_main(int m, double r) const {
  return cdf_eval(*tables_, Link::Main, m, r).probability;
}

double EmpiricalCdfProvider::ccdf_eve(int m, double r) const {
  return 1.0 - cdf_eval(*tables_, Link::Eve, m, r).probability;
}

TransmissionPmf pmf_transmissions(const CdfProvider& provider, double r0) {
  if (r0 < 0.0) throw std::invalid_argument("pmf_transmissions: r0 must be >= 0");
  const int max_tx = provider.max_tx();
  TransmissionPmf pmf;
  pmf.probs.resize(static_cast<std::size_t>(max_tx));
  double prev = 1.0;  // Pr{I(0) < r0}: a session always transmits once
  for (int m = 1; m < max_tx; ++m) {
    const double cur = provider.cdf_main(m, r0);
    const double p = prev - cur;
    if (p < -1e-9)
      throw std::runtime_error("pmf_transmissions: provider CDF not monotone in m");
    pmf.probs[static_cast<std::size_t>(m - 1)] = p < 0.0 ? 0.0 : p;
    prev = cur;
  }
  pmf.probs[static_cast<std::size_t>(max_tx - 1)] = prev;
  return pmf;
}

double connection_outage(const CdfProvider& provider, double r0) {
  if (r0 < 0.0) throw std::invalid_argument("connection_outage: r0 must be >= 0");
  return provider.cdf_main(provider.max_tx(), r0);
}

double secrecy_outage(const CdfProvider& provider, const WynerRates& rates) {
  validate(rates);
  const TransmissionPmf pmf = pmf_transmissions(provider, rates.r0);
  const double gap = rates.r0 - rates.rs;
  double ps = 0.0;
  for (int m = 1; m <= provider.max_tx(); ++m)
    ps += pmf.probs[static_cast<std::size_t>(m - 1)] * provider.ccdf_eve(m, gap);
  return ps;
}

double expected_transmissions(const CdfProvider& provider, double r0) {
  if (r0 < 0.0)
    throw std::invalid_argument("expected_transmissions: r0 must be >= 0");
  double expected = 1.0;
  for (int m = 1; m <= provider.max_tx(); ++m)
    expected += provider.cdf_main(m, r0);
  return expected;
}

double throughput(const WynerRates& rates, double pe, double expected_m,
                  int max_tx) {
  validate(rates);
  if (!(expected_m >= 1.0))
    throw std::invalid_argument("throughput: expected_m must be >= 1");
  return max_tx * rates.rs * (1.0 - pe) / expected_m;
}

ThroughputReport evaluate_rates(const CdfProvider& provider,
                                const WynerRates& rates) {
  const double pe = connection_outage(provider, rates.r0);
  const double ps = secrecy_outage(provider, rates);
  const double em = expected_transmissions(provider, rates.r0);
  return ThroughputReport{rates, throughput(rates, pe, em, provider.max_tx()),
                          pe, ps, em};
}

}  // namespace shrq
