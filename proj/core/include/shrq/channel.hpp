#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shrq/rng.hpp"

namespace shrq {

enum class Protocol { Rtd, Inr };

// Rayleigh fading at the SNR level: instantaneous linear SNR is
// exponential with the given mean (transmit power is absorbed into it).
struct FadingSpec {
  double mean_snr_linear;
};

inline constexpr int kMaxTxCeiling = 1024;

struct SystemParams {
  int max_tx;        // M
  FadingSpec main;   // legitimate receiver
  FadingSpec eve;    // eavesdropper
};

// Mother-code rate pair in bits per channel use; rs <= r0.
struct WynerRates {
  double r0;
  double rs;
};

// One block-fading draw for a whole HARQ session, both links.
struct ChannelRealization {
  std::vector<double> main_snrs;
  std::vector<double> eve_snrs;
};

struct OutageFlags {
  bool connection_outage;
  bool secrecy_outage;
};

void validate(const FadingSpec& spec);
void validate(const SystemParams& params);
void validate(const WynerRates& rates);

double db_to_linear(double snr_db);

std::vector<double> sample_snrs(const FadingSpec& spec, std::size_t count,
                                RngStream& stream);

// Accumulated mutual information after m of M transmissions, bits per
// channel use, real Gaussian inputs. m = 0 returns 0.
double acc_mi_inr(int m, int max_tx, std::span<const double> snrs);
double acc_mi_rtd(int m, int max_tx, std::span<const double> snrs);
double acc_mi(Protocol protocol, int m, int max_tx, std::span<const double> snrs);

// Outage indicators after m transmissions of one realization. Strict
// inequalities; boundary equality counts as non-outage.
OutageFlags outage_flags(Protocol protocol, const WynerRates& rates,
                         const ChannelRealization& realization, int m);

}  // namespace shrq
