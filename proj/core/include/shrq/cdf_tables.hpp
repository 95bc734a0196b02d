#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "shrq/channel.hpp"

namespace shrq {

enum class Link { Main, Eve };

struct CdfEstimate {
  double probability;
  double ci_halfwidth;  // 95% normal-approximation half-width
};

// Per-m sorted samples of accumulated mutual information for both links.
// One table serves every (r0, rs) query made against the same draws
// (common random numbers), so estimated outage curves are monotone.
class CdfTables {
 public:
  CdfTables(Protocol protocol, const SystemParams& params,
            std::size_t sample_count, std::uint64_t seed,
            std::vector<std::vector<double>> main_columns,
            std::vector<std::vector<double>> eve_columns);

  Protocol protocol() const { return protocol_; }
  int max_tx() const { return max_tx_; }
  std::size_t sample_count() const { return sample_count_; }
  std::uint64_t seed() const { return seed_; }
  double mean_snr(Link link) const {
    return link == Link::Main ? mean_main_ : mean_eve_;
  }

  // sorted ascending, length sample_count; m in [1, max_tx]
  const std::vector<double>& column(Link link, int m) const;

 private:
  Protocol protocol_;
  int max_tx_;
  std::size_t sample_count_;
  std::uint64_t seed_;
  double mean_main_;
  double mean_eve_;
  std::vector<std::vector<double>> main_;
  std::vector<std::vector<double>> eve_;
};

inline constexpr std::size_t kDefaultTableBudgetBytes = 8ull << 30;

/// Draws sample_count sessions of (main, eve) SNR vectors and records the
/// accumulated MI at every m = 1..max_tx by prefix computation, then sorts
/// each column. Deterministic in (seed, sample_count, params) at any
/// worker count. Throws std::length_error past the memory budget.
CdfTables build_cdf_tables(const SystemParams& params, Protocol protocol,
                           std::size_t sample_count, std::uint64_t seed,
                           std::size_t max_bytes = kDefaultTableBudgetBytes);

/// Fraction of samples strictly below r plus a binomial CI half-width.
CdfEstimate cdf_eval(const CdfTables& tables, Link link, int m, double r);

// Binary cache. Header: magic "SHRQCDF1", protocol, M, n, seed, mean SNRs
// as 8-byte little-endian values, then raw sorted columns (main, then eve).
void save_cdf_tables(const CdfTables& tables, const std::filesystem::path& path);
CdfTables load_cdf_tables(const std::filesystem::path& path);

}  // namespace shrq
