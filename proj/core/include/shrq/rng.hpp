#pragma once

#include <cmath>
#include <cstdint>

namespace shrq {

// splitmix64 finalizer; also used to decorrelate substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based uniform stream. Substreams keyed by (seed, chunk) are
// statistically independent and give bit-identical draws regardless of
// how chunks are assigned to threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(mix64(seed)) {}

  static RngStream substream(std::uint64_t seed, std::uint64_t chunk) {
    return RngStream(mix64(seed) ^ mix64(~chunk));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // inverse-CDF exponential draw, mean > 0
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

 private:
  std::uint64_t state_;
};

}  // namespace shrq
