#include "shrq/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace shrq {

void validate(const FadingSpec& spec) {
  if (!(spec.mean_snr_linear > 0.0))
    throw std::invalid_argument("FadingSpec: mean_snr_linear must be > 0");
}

void validate(const SystemParams& params) {
  if (params.max_tx < 1 || params.max_tx > kMaxTxCeiling)
    throw std::invalid_argument("SystemParams: max_tx out of [1, 1024]");
  validate(params.main);
  validate(params.eve);
}

void validate(const WynerRates& rates) {
  if (!(rates.rs >= 0.0) || !(rates.r0 >= rates.rs))
    throw std::invalid_argument("WynerRates: need 0 <= rs <= r0");
}

double db_to_linear(double snr_db) {
  if (!std::isfinite(snr_db))
    throw std::invalid_argument("db_to_linear: non-finite input");
  return std::pow(10.0, snr_db / 10.0);
}

std::vector<double> sample_snrs(const FadingSpec& spec, std::size_t count,
                                RngStream& stream) {
  validate(spec);
  std::vector<double> out(count);
  for (auto& v : out) v = stream.exponential(spec.mean_snr_linear);
  return out;
}

namespace {

void check_range(int m, int max_tx, std::size_t available) {
  if (m < 0 || m > max_tx)
    throw std::out_of_range("acc_mi: m out of [0, max_tx]");
  if (static_cast<std::size_t>(max_tx) > available)
    throw std::invalid_argument("acc_mi: fewer SNR entries than max_tx");
}

}  // namespace

double acc_mi_inr(int m, int max_tx, std::span<const double> snrs) {
  check_range(m, max_tx, snrs.size());
  double sum = 0.0;
  for (int i = 0; i < m; ++i) sum += std::log2(1.0 + snrs[i]);
  return sum / (2.0 * max_tx);
}

double acc_mi_rtd(int m, int max_tx, std::span<const double> snrs) {
  check_range(m, max_tx, snrs.size());
  double snr_sum = 0.0;
  for (int i = 0; i < m; ++i) snr_sum += snrs[i];
  if (m == 0) return 0.0;
  return std::log2(1.0 + snr_sum) / (2.0 * max_tx);
}

double acc_mi(Protocol protocol, int m, int max_tx, std::span<const double> snrs) {
  return protocol == Protocol::Inr ? acc_mi_inr(m, max_tx, snrs)
                                   : acc_mi_rtd(m, max_tx, snrs);
}

OutageFlags outage_flags(Protocol protocol, const WynerRates& rates,
                         const ChannelRealization& realization, int m) {
  validate(rates);
  if (realization.main_snrs.size() != realization.eve_snrs.size())
    throw std::invalid_argument("outage_flags: link vectors differ in length");
  const int max_tx = static_cast<int>(realization.main_snrs.size());
  if (m < 1 || m > max_tx)
    throw std::out_of_range("outage_flags: m out of [1, max_tx]");
  const double mi_main = acc_mi(protocol, m, max_tx, realization.main_snrs);
  const double mi_eve = acc_mi(protocol, m, max_tx, realization.eve_snrs);
  return OutageFlags{mi_main < rates.r0, mi_eve > rates.r0 - rates.rs};
}

}  // namespace shrq
