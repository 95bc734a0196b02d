#include "shrq/sim.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "shrq/parallel.hpp"

namespace shrq {

namespace {

constexpr std::size_t kChunkSize = 1u << 14;

struct Accumulator {
  std::uint64_t decoded = 0;
  std::uint64_t violated = 0;
  double slots = 0.0;
  double slots_sq = 0.0;
  double reward = 0.0;
  double reward_sq = 0.0;
  double reward_slots = 0.0;
  std::vector<std::uint64_t> histogram;

  void add(const SessionOutcome& outcome) {
    const double s = outcome.m_stop + (outcome.decoded ? 0.0 : 1.0);
    const double r = outcome.reward_bits_per_symbol;
    decoded += outcome.decoded;
    violated += outcome.secrecy_violated;
    slots += s;
    slots_sq += s * s;
    reward += r;
    reward_sq += r * r;
    reward_slots += r * s;
    ++histogram[static_cast<std::size_t>(outcome.m_stop - 1)];
  }

  void merge(const Accumulator& other) {
    decoded += other.decoded;
    violated += other.violated;
    slots += other.slots;
    slots_sq += other.slots_sq;
    reward += other.reward;
    reward_sq += other.reward_sq;
    reward_slots += other.reward_slots;
    for (std::size_t i = 0; i < histogram.size(); ++i)
      histogram[i] += other.histogram[i];
  }
};

Estimate proportion_estimate(std::uint64_t hits, std::size_t n) {
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return Estimate{p, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace

SessionOutcome run_session(const WynerRates& rates, Protocol protocol,
                           const ChannelRealization& realization) {
  validate(rates);
  if (realization.main_snrs.size() != realization.eve_snrs.size() ||
      realization.main_snrs.empty())
    throw std::invalid_argument("run_session: bad realization");
  const int max_tx = static_cast<int>(realization.main_snrs.size());

  int m_stop = max_tx;
  bool decoded = false;
  for (int m = 1; m <= max_tx; ++m) {
    if (acc_mi(protocol, m, max_tx, realization.main_snrs) >= rates.r0) {
      m_stop = m;
      decoded = true;
      break;
    }
  }
  const double eve_mi = acc_mi(protocol, m_stop, max_tx, realization.eve_snrs);
  return SessionOutcome{m_stop, decoded, eve_mi > rates.r0 - rates.rs,
                        decoded ? max_tx * rates.rs : 0.0};
}

SessionOutcome run_session(const WynerRates& rates, const SystemParams& params,
                           Protocol protocol, RngStream& stream) {
  validate(params);
  ChannelRealization realization;
  realization.main_snrs.resize(static_cast<std::size_t>(params.max_tx));
  realization.eve_snrs.resize(static_cast<std::size_t>(params.max_tx));
  for (int i = 0; i < params.max_tx; ++i) {
    realization.main_snrs[static_cast<std::size_t>(i)] =
        stream.exponential(params.main.mean_snr_linear);
    realization.eve_snrs[static_cast<std::size_t>(i)] =
        stream.exponential(params.eve.mean_snr_linear);
  }
  return run_session(rates, protocol, realization);
}

EmpiricalReport run_campaign(const WynerRates& rates, const SystemParams& params,
                             Protocol protocol, std::size_t sessions,
                             std::uint64_t seed) {
  validate(rates);
  validate(params);
  if (sessions < 1)
    throw std::invalid_argument("run_campaign: sessions must be >= 1");

  const std::size_t chunk_count = (sessions + kChunkSize - 1) / kChunkSize;
  Accumulator total;
  total.histogram.assign(static_cast<std::size_t>(params.max_tx), 0);
  std::mutex merge_mutex;

  parallel_chunks(chunk_count, [&](std::size_t chunk) {
    RngStream stream = RngStream::substream(seed, chunk);
    const std::size_t begin = chunk * kChunkSize;
    const std::size_t end = std::min(begin + kChunkSize, sessions);
    Accumulator local;
    local.histogram.assign(static_cast<std::size_t>(params.max_tx), 0);
    for (std::size_t s = begin; s < end; ++s)
      local.add(run_session(rates, params, protocol, stream));
    std::lock_guard<std::mutex> lock(merge_mutex);
    total.merge(local);
  });

  const auto n = static_cast<double>(sessions);
  const double mean_slots = total.slots / n;
  const double mean_reward = total.reward / n;
  const double var_slots =
      std::max(0.0, total.slots_sq / n - mean_slots * mean_slots);
  const double var_reward =
      std::max(0.0, total.reward_sq / n - mean_reward * mean_reward);
  const double cov =
      total.reward_slots / n - mean_reward * mean_slots;

  const double eta = mean_reward / mean_slots;
  // delta-method variance of the ratio of means
  const double eta_var = std::max(
      0.0, (var_reward - 2.0 * eta * cov + eta * eta * var_slots) /
               (n * mean_slots * mean_slots));

  EmpiricalReport report;
  report.eta = Estimate{eta, 1.96 * std::sqrt(eta_var)};
  report.pe = proportion_estimate(sessions - total.decoded, sessions);
  report.ps = proportion_estimate(total.violated, sessions);
  report.expected_m =
      Estimate{mean_slots, 1.96 * std::sqrt(var_slots / n)};
  report.sessions = sessions;
  report.stop_histogram = std::move(total.histogram);
  return report;
}

}  // namespace shrq
