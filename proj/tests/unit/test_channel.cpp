#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "shrq/channel.hpp"

using namespace shrq;

TEST_SUITE("channel") {

TEST_CASE("db_to_linear") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(db_to_linear(15.0) == doctest::Approx(31.6228).epsilon(1e-5));
  CHECK(db_to_linear(5.0) == doctest::Approx(3.16228).epsilon(1e-5));
  CHECK_THROWS_AS(db_to_linear(std::nan("")), std::invalid_argument);
}

TEST_CASE("sample_snrs basics") {
  RngStream stream(42);
  CHECK(sample_snrs(FadingSpec{2.0}, 0, stream).empty());

  RngStream a(7), b(7);
  const auto va = sample_snrs(FadingSpec{1.5}, 100, a);
  const auto vb = sample_snrs(FadingSpec{1.5}, 100, b);
  CHECK(va == vb);  // same stream state, same draws

  CHECK_THROWS_AS(sample_snrs(FadingSpec{0.0}, 1, a), std::invalid_argument);
  CHECK_THROWS_AS(sample_snrs(FadingSpec{-2.0}, 1, a), std::invalid_argument);
}

TEST_CASE("sample_snrs mean concentrates") {
  RngStream stream(2024);
  const auto draws = sample_snrs(FadingSpec{2.0}, 1'000'000, stream);
  double sum = 0.0;
  for (double v : draws) {
    CHECK(v >= 0.0);
    sum += v;
  }
  const double mean = sum / static_cast<double>(draws.size());
  CHECK(mean > 1.99);
  CHECK(mean < 2.01);
}

TEST_CASE("accumulated MI examples") {
  const std::vector<double> any{1.0, 2.0, 3.0, 4.0};
  CHECK(acc_mi_inr(0, 4, any) == 0.0);
  CHECK(acc_mi_rtd(0, 4, any) == 0.0);

  const std::vector<double> snrs{1.0, 3.0, 9.0, 9.0};
  CHECK(acc_mi_inr(2, 4, snrs) == doctest::Approx(0.375));

  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(acc_mi_rtd(3, 3, ones) == doctest::Approx(1.0 / 3.0));

  const std::vector<double> high(8, 31.6228);
  CHECK(acc_mi_inr(8, 8, high) == doctest::Approx(2.5139044).epsilon(1e-6));
  CHECK(acc_mi_rtd(8, 8, high) == doctest::Approx(0.49928654).epsilon(1e-6));

  // single transmission: the two protocols coincide
  CHECK(acc_mi_inr(1, 4, snrs) == doctest::Approx(acc_mi_rtd(1, 4, snrs)));

  CHECK_THROWS_AS(acc_mi_inr(5, 4, snrs), std::out_of_range);
  CHECK_THROWS_AS(acc_mi_inr(-1, 4, snrs), std::out_of_range);
  CHECK_THROWS_AS(acc_mi_inr(2, 5, snrs), std::invalid_argument);
}

TEST_CASE("pointwise dominance and monotonicity") {
  RngStream stream(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int max_tx = 1 + static_cast<int>(stream.next() % 12);
    std::vector<double> snrs(static_cast<std::size_t>(max_tx));
    for (auto& v : snrs) v = stream.exponential(5.0);
    double prev_inr = 0.0, prev_rtd = 0.0;
    for (int m = 1; m <= max_tx; ++m) {
      const double inr = acc_mi_inr(m, max_tx, snrs);
      const double rtd = acc_mi_rtd(m, max_tx, snrs);
      CHECK(inr >= rtd - 1e-12);
      CHECK(inr >= prev_inr);
      CHECK(rtd >= prev_rtd);
      prev_inr = inr;
      prev_rtd = rtd;
    }
  }
}

TEST_CASE("dominance is tight iff at most one block is active") {
  const std::vector<double> one_active{0.0, 7.0, 0.0};
  CHECK(acc_mi_inr(3, 3, one_active) ==
        doctest::Approx(acc_mi_rtd(3, 3, one_active)));
  const std::vector<double> two_active{2.0, 7.0, 0.0};
  CHECK(acc_mi_inr(3, 3, two_active) > acc_mi_rtd(3, 3, two_active) + 1e-9);
}

TEST_CASE("MI scales as 1/max_tx") {
  const std::vector<double> snrs{4.0, 2.0, 8.0, 1.0, 0.5, 3.0, 3.0, 3.0};
  CHECK(acc_mi_inr(3, 4, snrs) ==
        doctest::Approx(2.0 * acc_mi_inr(3, 8, snrs)));
  CHECK(acc_mi_rtd(3, 4, snrs) ==
        doctest::Approx(2.0 * acc_mi_rtd(3, 8, snrs)));
}

TEST_CASE("substream draws do not depend on batch partitioning") {
  RngStream whole = RngStream::substream(11, 0);
  const auto all = sample_snrs(FadingSpec{1.0}, 64, whole);
  RngStream again = RngStream::substream(11, 0);
  const auto first = sample_snrs(FadingSpec{1.0}, 40, again);
  const auto rest = sample_snrs(FadingSpec{1.0}, 24, again);
  for (std::size_t i = 0; i < 40; ++i) CHECK(all[i] == first[i]);
  for (std::size_t i = 0; i < 24; ++i) CHECK(all[40 + i] == rest[i]);
}

TEST_CASE("outage flags") {
  const ChannelRealization quiet_eve{{0.5, 0.5}, {0.0, 0.0}};
  // zero secrecy gap but silent eavesdropper: 0 > 0 is false
  const OutageFlags f1 = outage_flags(Protocol::Inr, WynerRates{1.0, 1.0},
                                      quiet_eve, 2);
  CHECK_FALSE(f1.secrecy_outage);

  // r0 = 0 can never cause a connection outage
  const OutageFlags f2 = outage_flags(Protocol::Rtd, WynerRates{0.0, 0.0},
                                      quiet_eve, 1);
  CHECK_FALSE(f2.connection_outage);

  const ChannelRealization strong{std::vector<double>(8, 31.6228),
                                  std::vector<double>(8, 0.0)};
  const OutageFlags f3 = outage_flags(Protocol::Inr, WynerRates{2.6, 0.1},
                                      strong, 8);
  CHECK(f3.connection_outage);  // 2.5139 < 2.6

  CHECK_THROWS_AS(
      outage_flags(Protocol::Inr, WynerRates{1.0, 0.5}, quiet_eve, 0),
      std::out_of_range);
  CHECK_THROWS_AS(
      outage_flags(Protocol::Inr, WynerRates{0.5, 1.0}, quiet_eve, 1),
      std::invalid_argument);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(SystemParams{0, FadingSpec{1.0}, FadingSpec{1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate(SystemParams{2000, FadingSpec{1.0}, FadingSpec{1.0}}),
      std::invalid_argument);
  CHECK_NOTHROW(validate(SystemParams{8, FadingSpec{1.0}, FadingSpec{1.0}}));
  CHECK_THROWS_AS(validate(WynerRates{1.0, -0.1}), std::invalid_argument);
}

}  // TEST_SUITE
