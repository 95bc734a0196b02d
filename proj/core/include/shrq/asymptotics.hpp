#pragma once

#include "shrq/channel.hpp"

namespace shrq {

struct ErgodicMoments {
  double mu_main;  // (1/2) E[log2(1 + main SNR)], bits/channel use
  double mu_eve;   // (1/2) E[log2(1 + eve SNR)]
};

/// (1/2) E[log2(1 + X)] for X exponential with the given mean, by adaptive
/// quadrature (absolute error <= 1e-8).
double ergodic_half_log_moment(const FadingSpec& spec);

ErgodicMoments ergodic_moments(const FadingSpec& main, const FadingSpec& eve);

// Large-M feasibility of vanishing connection and secrecy outage for the
// incremental-redundancy protocol.
bool inr_feasible(const WynerRates& rates, const FadingSpec& main,
                  const FadingSpec& eve);

// Same requirement for the one-shot M-fading-block scheme (no feedback);
// strictly stronger on the secrecy gap whenever r0 is supportable.
bool mfb_feasible(const WynerRates& rates, const FadingSpec& main,
                  const FadingSpec& eve);

/// Limiting secrecy throughput as the transmission budget grows without
/// bound: zero for repetition diversity, the ergodic half-log-ratio gap
/// (clamped at zero) for incremental redundancy.
double limit_throughput(Protocol protocol, const FadingSpec& main,
                        const FadingSpec& eve);

}  // namespace shrq
