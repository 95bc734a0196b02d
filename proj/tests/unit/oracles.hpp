#pragma once

// Independent reference implementations used only to check the library.
// Kept deliberately naive; none of these share code with core/.

#include <cmath>
#include <stdexcept>

namespace oracles {

// P(a, x) for integer a via the Poisson tail identity:
// P(a, x) = exp(-x) * sum_{k >= a} x^k / k!, truncated once terms vanish.
inline double poisson_tail_gamma_p(int a, double x) {
  if (a < 1 || x < 0.0) throw std::invalid_argument("poisson_tail_gamma_p");
  if (x == 0.0) return 0.0;
  double log_term = a * std::log(x) - std::lgamma(a + 1.0);  // k = a term
  double sum = 0.0;
  double term = std::exp(log_term);
  for (int k = a; k < a + 600; ++k) {
    sum += term;
    term *= x / (k + 1);
    if (term < sum * 1e-18) break;
  }
  return std::exp(-x) * sum;
}

// Exponential integral E1(x) for 0 < x <= 1 by the alternating series.
inline double expint_e1_series(double x) {
  if (!(x > 0.0) || x > 1.0) throw std::invalid_argument("expint_e1_series");
  constexpr double kEulerGamma = 0.57721566490153286;
  double sum = -kEulerGamma - std::log(x);
  double term = -1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -x / k;
    sum += term / k;
  }
  return sum;
}

// Exponential integral E1(x) for x > 1 via the Lentz continued fraction.
inline double expint_e1_cfrac(double x) {
  if (!(x > 1.0)) throw std::invalid_argument("expint_e1_cfrac");
  double b = x + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

inline double expint_e1(double x) {
  return x <= 1.0 ? expint_e1_series(x) : expint_e1_cfrac(x);
}

// (1/2) E[log2(1 + X)], X exponential with the given mean, via the
// exponential-integral identity exp(1/mu) E1(1/mu) / (2 ln 2).
inline double half_log_moment_e1(double mean) {
  return std::exp(1.0 / mean) * expint_e1(1.0 / mean) /
         (2.0 * std::log(2.0));
}

}  // namespace oracles
