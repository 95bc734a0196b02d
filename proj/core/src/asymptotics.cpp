#include "shrq/asymptotics.hpp"

#include <cmath>
#include <functional>

namespace shrq {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double fm, double whole, double tol,
                int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive(f, a, fa, b, fb, fm, simpson(f, a, fa, b, fb, fm), tol, 48);
}

}  // namespace

double ergodic_half_log_moment(const FadingSpec& spec) {
  validate(spec);
  const double mu = spec.mean_snr_linear;
  auto density_weighted = [mu](double x) {
    return std::exp(-x / mu) * std::log2(1.0 + x) / mu;
  };
  const double upper = 50.0 * mu;
  double integral = integrate(density_weighted, 0.0, upper, 1e-10);
  // tail beyond 50 means: exp(-50) * log2(1 + upper) dominates, remainder
  // is below exp(-50) * mu / (1 + upper)
  integral += std::exp(-50.0) * std::log2(1.0 + upper);
  return 0.5 * integral;
}

ErgodicMoments ergodic_moments(const FadingSpec& main, const FadingSpec& eve) {
  return ErgodicMoments{ergodic_half_log_moment(main),
                        ergodic_half_log_moment(eve)};
}

bool inr_feasible(const WynerRates& rates, const FadingSpec& main,
                  const FadingSpec& eve) {
  validate(rates);
  const ErgodicMoments mom = ergodic_moments(main, eve);
  // half-log ratio equals the full-log ratio
  return rates.r0 <= mom.mu_main &&
         rates.r0 - rates.rs >= rates.r0 * (mom.mu_eve / mom.mu_main);
}

bool mfb_feasible(const WynerRates& rates, const FadingSpec& main,
                  const FadingSpec& eve) {
  validate(rates);
  const ErgodicMoments mom = ergodic_moments(main, eve);
  return rates.r0 <= mom.mu_main && rates.r0 - rates.rs >= mom.mu_eve;
}

double limit_throughput(Protocol protocol, const FadingSpec& main,
                        const FadingSpec& eve) {
  if (protocol == Protocol::Rtd) {
    validate(main);
    validate(eve);
    return 0.0;
  }
  const ErgodicMoments mom = ergodic_moments(main, eve);
  const double gap = mom.mu_main - mom.mu_eve;
  return gap > 0.0 ? gap : 0.0;
}

}  // namespace shrq
