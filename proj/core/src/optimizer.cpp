#include "shrq/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace shrq {

void validate(const OutageConstraints& constraints) {
  if (!(constraints.xi_s > 0.0) || constraints.xi_s > 1.0)
    throw std::invalid_argument("OutageConstraints: xi_s out of (0, 1]");
  if (constraints.xi_e && (!(*constraints.xi_e > 0.0) || *constraints.xi_e > 1.0))
    throw std::invalid_argument("OutageConstraints: xi_e out of (0, 1]");
}

void validate(const SearchConfig& config) {
  if (config.r0_grid_points < 2)
    throw std::invalid_argument("SearchConfig: r0_grid_points must be >= 2");
  if (!(config.rs_bisect_tol > 0.0))
    throw std::invalid_argument("SearchConfig: rs_bisect_tol must be > 0");
  if (!(config.r0_max > 0.0))
    throw std::invalid_argument("SearchConfig: r0_max must be > 0");
}

double max_rs_given_r0(const CdfProvider& provider, double r0, double xi_s,
                       double tol) {
  if (r0 < 0.0) throw std::invalid_argument("max_rs_given_r0: r0 must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("max_rs_given_r0: tol must be > 0");
  auto feasible = [&](double rs) {
    return secrecy_outage(provider, WynerRates{r0, rs}) <= xi_s;
  };
  if (feasible(r0)) return r0;
  if (!feasible(0.0)) return 0.0;
  double lo = 0.0, hi = r0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

double max_r0_feasible(const CdfProvider& provider, double xi_e, double r0_max) {
  if (!(xi_e > 0.0) || xi_e > 1.0)
    throw std::invalid_argument("max_r0_feasible: xi_e out of (0, 1]");
  if (!(r0_max > 0.0))
    throw std::invalid_argument("max_r0_feasible: r0_max must be > 0");
  if (connection_outage(provider, r0_max) <= xi_e) return r0_max;
  constexpr double kEps = 1e-9;
  if (connection_outage(provider, kEps) > xi_e)
    throw std::runtime_error("max_r0_feasible: connection outage target infeasible");
  double lo = kEps, hi = r0_max;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (connection_outage(provider, mid) <= xi_e ? lo : hi) = mid;
  }
  return lo;
}

ThroughputReport optimize(const CdfProvider& provider,
                          const OutageConstraints& constraints,
                          const SearchConfig& config) {
  validate(constraints);
  validate(config);

  double r0_cap = config.r0_max;
  if (constraints.xi_e) {
    try {
      r0_cap = max_r0_feasible(provider, *constraints.xi_e, config.r0_max);
    } catch (const std::runtime_error&) {
      return ThroughputReport{WynerRates{0.0, 0.0}, 0.0, 0.0, 1.0, 1.0};
    }
  }

  ThroughputReport best{WynerRates{0.0, 0.0}, 0.0, 0.0, 1.0, 1.0};
  for (int i = 1; i <= config.r0_grid_points; ++i) {
    const double r0 = r0_cap * i / config.r0_grid_points;
    const double rs = max_rs_given_r0(provider, r0, constraints.xi_s,
                                      config.rs_bisect_tol);
    if (rs <= 0.0) continue;
    const ThroughputReport report =
        evaluate_rates(provider, WynerRates{r0, rs});
    if (report.eta > best.eta) best = report;  // strict: ties keep smaller r0
  }
  return best;
}

}  // namespace shrq
