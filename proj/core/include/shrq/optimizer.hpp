#pragma once

#include <cstdint>
#include <optional>

#include "shrq/metrics.hpp"

namespace shrq {

struct OutageConstraints {
  double xi_s = 1.0;            // secrecy outage target, in (0, 1]
  std::optional<double> xi_e;   // optional connection outage target
};

struct SearchConfig {
  double r0_max = 4.0;
  int r0_grid_points = 400;
  double rs_bisect_tol = 1e-4;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
};

void validate(const OutageConstraints& constraints);
void validate(const SearchConfig& config);

/// Largest rs in [0, r0] keeping the secrecy outage at or below xi_s,
/// by bisection (P_s is nondecreasing in rs under a fixed provider).
/// Returns 0 when no positive rs is feasible.
double max_rs_given_r0(const CdfProvider& provider, double r0, double xi_s,
                       double tol);

/// Largest r0 in (0, r0_max] keeping the connection outage at or below
/// xi_e. Throws std::runtime_error when even vanishing r0 is infeasible.
double max_r0_feasible(const CdfProvider& provider, double xi_e, double r0_max);

/// Grid search over r0 with a secrecy bisection per grid point; ties break
/// toward smaller r0. Returns a zero-throughput report when the feasible
/// set contains no positive-throughput point.
ThroughputReport optimize(const CdfProvider& provider,
                          const OutageConstraints& constraints,
                          const SearchConfig& config);

}  // namespace shrq
