#include "shrq/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shrq {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;

// P(a,x) by the standard power series, valid and fast for x < a + 1.
double gamma_p_series(int a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a,x) by modified Lentz continued fraction, for x >= a + 1.
double gamma_q_cfrac(int a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double reg_gamma_lower(int a, double x) {
  if (a < 1) throw std::invalid_argument("reg_gamma_lower: a must be >= 1");
  if (x < 0.0) throw std::invalid_argument("reg_gamma_lower: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cfrac(a, x);
}

double cdf_mi_rtd(int m, int max_tx, const FadingSpec& spec, double r) {
  validate(spec);
  if (m < 1 || m > max_tx)
    throw std::out_of_range("cdf_mi_rtd: m out of [1, max_tx]");
  if (r <= 0.0) return 0.0;
  const double exponent = 2.0 * max_tx * r;
  // 2^exponent overflows long before this; the CDF is 1 to all digits.
  if (exponent > 1000.0) return 1.0;
  const double threshold = std::expm1(exponent * M_LN2) / spec.mean_snr_linear;
  return reg_gamma_lower(m, threshold);
}

double ccdf_mi_eve_rtd(int m, int max_tx, const FadingSpec& spec, double r) {
  if (r <= 0.0) return 1.0;
  return 1.0 - cdf_mi_rtd(m, max_tx, spec, r);
}

}  // namespace shrq
