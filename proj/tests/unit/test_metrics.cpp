#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>

#include "shrq/metrics.hpp"
#include "shrq/rng.hpp"

using namespace shrq;

namespace {

// scriptable provider for edge cases
class FakeProvider final : public CdfProvider {
 public:
  FakeProvider(int max_tx, std::function<double(int, double)> cdf,
               std::function<double(int, double)> ccdf)
      : max_tx_(max_tx), cdf_(std::move(cdf)), ccdf_(std::move(ccdf)) {}
  int max_tx() const override { return max_tx_; }
  double cdf_main(int m, double r) const override { return cdf_(m, r); }
  double ccdf_eve(int m, double r) const override { return ccdf_(m, r); }

 private:
  int max_tx_;
  std::function<double(int, double)> cdf_;
  std::function<double(int, double)> ccdf_;
};

double pmf_sum(const TransmissionPmf& pmf) {
  double sum = 0.0;
  for (double p : pmf.probs) sum += p;
  return sum;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("pmf edge cases") {
  const AnalyticRtdProvider provider(
      SystemParams{4, FadingSpec{2.0}, FadingSpec{1.0}});

  const TransmissionPmf first_try = pmf_transmissions(provider, 0.0);
  CHECK(first_try.probs[0] == doctest::Approx(1.0));
  for (std::size_t m = 1; m < 4; ++m) CHECK(first_try.probs[m] == 0.0);

  const TransmissionPmf all_fail = pmf_transmissions(provider, 500.0);
  for (std::size_t m = 0; m < 3; ++m) CHECK(all_fail.probs[m] == 0.0);
  CHECK(all_fail.probs[3] == doctest::Approx(1.0));

  CHECK_THROWS_AS(pmf_transmissions(provider, -0.1), std::invalid_argument);
}

TEST_CASE("pmf hand-evaluated two-transmission case") {
  // mean 1, normalization M = 2, r0 = 1/4: the single-block threshold SNR
  // is 2^1 - 1 = 1, so the session ends early with probability e^{-1}
  const AnalyticRtdProvider provider(
      SystemParams{2, FadingSpec{1.0}, FadingSpec{1.0}});
  const TransmissionPmf pmf = pmf_transmissions(provider, 0.25);
  CHECK(pmf.probs[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-7));
  CHECK(pmf.probs[1] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-7));
}

TEST_CASE("pmf rejects non-monotone providers") {
  const FakeProvider bad(
      3, [](int m, double) { return m == 2 ? 0.9 : 0.1; },
      [](int, double) { return 0.0; });
  CHECK_THROWS_AS(pmf_transmissions(bad, 1.0), std::runtime_error);
}

TEST_CASE("connection outage") {
  const AnalyticRtdProvider provider(
      SystemParams{8, FadingSpec{31.6228}, FadingSpec{3.16228}});
  CHECK(connection_outage(provider, 0.0) == 0.0);
  // the 15 dB / M = 8 rate-cap anchor
  CHECK(connection_outage(provider, 0.38) ==
        doctest::Approx(1.52e-3).epsilon(0.02));
  double prev = 0.0;
  for (double r0 = 0.0; r0 < 1.0; r0 += 0.05) {
    const double pe = connection_outage(provider, r0);
    CHECK(pe >= prev);
    prev = pe;
  }
}

TEST_CASE("secrecy outage") {
  const AnalyticRtdProvider provider(
      SystemParams{1, FadingSpec{31.6228}, FadingSpec{3.16228}});
  // single transmission: P_s is the eavesdropper tail at the gap
  CHECK(secrecy_outage(provider, WynerRates{2.0, 1.5}) ==
        doctest::Approx(std::exp(-1.0 / 3.16228)).epsilon(1e-3));
  // zero gap: the eavesdropper always sees something
  CHECK(secrecy_outage(provider, WynerRates{0.7, 0.7}) ==
        doctest::Approx(1.0));
  // no secret bits and an enormous gap: never in secrecy outage
  CHECK(secrecy_outage(provider, WynerRates{40.0, 0.0}) <= 1e-12);

  const AnalyticRtdProvider wide(
      SystemParams{6, FadingSpec{31.6228}, FadingSpec{3.16228}});
  double prev = 0.0;
  for (double rs = 0.0; rs <= 0.8; rs += 0.05) {
    const double ps = secrecy_outage(wide, WynerRates{0.8, rs});
    CHECK(ps >= prev - 1e-12);
    prev = ps;
  }
}

TEST_CASE("expected transmissions") {
  const AnalyticRtdProvider provider(
      SystemParams{2, FadingSpec{1.0}, FadingSpec{1.0}});
  CHECK(expected_transmissions(provider, 0.0) == doctest::Approx(1.0));

  const double f1 = provider.cdf_main(1, 0.25);
  const double f2 = provider.cdf_main(2, 0.25);
  CHECK(expected_transmissions(provider, 0.25) ==
        doctest::Approx(1.0 + f1 + f2));

  const FakeProvider always_fail(
      5, [](int, double) { return 1.0; }, [](int, double) { return 0.5; });
  CHECK(expected_transmissions(always_fail, 3.0) == doctest::Approx(6.0));
}

TEST_CASE("renewal length identity") {
  // 1 + sum_m F(m) = sum_m m*pmf[m] + F(M): the final cdf term is the
  // failure mass counted once more by the renewal-length formula
  RngStream stream(404);
  for (int trial = 0; trial < 50; ++trial) {
    const int max_tx = 1 + static_cast<int>(stream.next() % 10);
    const AnalyticRtdProvider provider(SystemParams{
        max_tx, FadingSpec{0.5 + 30.0 * stream.uniform()},
        FadingSpec{0.5 + 5.0 * stream.uniform()}});
    const double r0 = 2.0 * stream.uniform();
    const TransmissionPmf pmf = pmf_transmissions(provider, r0);
    double mean_stop = 0.0;
    for (int m = 1; m <= max_tx; ++m)
      mean_stop += m * pmf.probs[static_cast<std::size_t>(m - 1)];
    CHECK(expected_transmissions(provider, r0) ==
          doctest::Approx(mean_stop + provider.cdf_main(max_tx, r0))
              .epsilon(1e-9));
  }
}

TEST_CASE("pmf normalizes on random providers") {
  RngStream stream(808);
  for (int trial = 0; trial < 100; ++trial) {
    const int max_tx = 1 + static_cast<int>(stream.next() % 12);
    const AnalyticRtdProvider provider(SystemParams{
        max_tx, FadingSpec{0.1 + 40.0 * stream.uniform()},
        FadingSpec{0.1 + 10.0 * stream.uniform()}});
    const double r0 = 3.0 * stream.uniform();
    CHECK(std::fabs(pmf_sum(pmf_transmissions(provider, r0)) - 1.0) <= 1e-9);
  }
}

TEST_CASE("throughput") {
  CHECK(throughput(WynerRates{1.0, 0.0}, 0.1, 2.0, 8) == 0.0);
  CHECK(throughput(WynerRates{0.5, 0.5}, 0.0, 1.0, 1) == doctest::Approx(0.5));
  CHECK(throughput(WynerRates{0.5, 0.3}, 1e-3, 1.25, 8) ==
        doctest::Approx(1.91808));
  CHECK_THROWS_AS(throughput(WynerRates{1.0, 0.5}, 0.0, 0.5, 8),
                  std::invalid_argument);
}

TEST_CASE("throughput linear in rs") {
  const WynerRates a{1.0, 0.2}, b{1.0, 0.6};
  CHECK(throughput(b, 0.01, 1.5, 8) ==
        doctest::Approx(3.0 * throughput(a, 0.01, 1.5, 8)));
}

TEST_CASE("evaluate_rates self-consistency") {
  const AnalyticRtdProvider provider(
      SystemParams{8, FadingSpec{31.6228}, FadingSpec{3.16228}});
  const ThroughputReport report =
      evaluate_rates(provider, WynerRates{0.35, 0.2});
  CHECK(report.eta ==
        doctest::Approx(8.0 * report.rates.rs * (1.0 - report.pe) /
                        report.expected_m)
            .epsilon(1e-12));
  CHECK(report.expected_m >= 1.0);
  CHECK(report.expected_m <= 9.0);
}

TEST_CASE("INR connection outage never worse than RTD") {
  const SystemParams params{6, FadingSpec{10.0}, FadingSpec{2.0}};
  const CdfTables rtd = build_cdf_tables(params, Protocol::Rtd, 40000, 6);
  const CdfTables inr = build_cdf_tables(params, Protocol::Inr, 40000, 6);
  const EmpiricalCdfProvider rtd_provider(rtd);
  const EmpiricalCdfProvider inr_provider(inr);
  // identical seed means identical SNR draws: dominance is pointwise
  for (double r0 = 0.05; r0 < 2.0; r0 += 0.1)
    CHECK(connection_outage(inr_provider, r0) <=
          connection_outage(rtd_provider, r0));
}

}  // TEST_SUITE
