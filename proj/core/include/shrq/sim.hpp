#pragma once

#include <cstdint>
#include <vector>

#include "shrq/channel.hpp"

namespace shrq {

struct SessionOutcome {
  int m_stop;                    // transmissions used, in [1, max_tx]
  bool decoded;
  bool secrecy_violated;         // eve MI at m_stop exceeds the secrecy gap
  double reward_bits_per_symbol; // max_tx * rs on success, 0 otherwise
};

struct Estimate {
  double value;
  double ci_halfwidth;
};

struct EmpiricalReport {
  Estimate eta;
  Estimate pe;
  Estimate ps;
  Estimate expected_m;  // renewal length in slots (failed sessions close
                        // the renewal with one extra slot)
  std::size_t sessions;
  std::vector<std::uint64_t> stop_histogram;  // counts of m_stop = 1..max_tx
};

/// One ACK/NACK session over an injected channel realization: transmit
/// until the accumulated main MI reaches r0 or the budget runs out, then
/// score secrecy against the eavesdropper MI at the stopping count.
SessionOutcome run_session(const WynerRates& rates, Protocol protocol,
                           const ChannelRealization& realization);

/// Same, drawing a fresh realization from the stream (max_tx draws per
/// link are always consumed, so stream position is rate-independent).
SessionOutcome run_session(const WynerRates& rates, const SystemParams& params,
                           Protocol protocol, RngStream& stream);

/// Aggregates i.i.d. sessions sharded over per-chunk substreams;
/// deterministic in (seed, sessions) at any worker count.
EmpiricalReport run_campaign(const WynerRates& rates, const SystemParams& params,
                             Protocol protocol, std::size_t sessions,
                             std::uint64_t seed);

}  // namespace shrq
