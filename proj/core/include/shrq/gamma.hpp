#pragma once

#include "shrq/channel.hpp"

namespace shrq {

// Sum of `shape` i.i.d. exponential SNRs with mean `scale` (the
// maximal-ratio-combined channel after `shape` repetitions).
struct GammaParams {
  int shape;
  double scale;
};

/// Regularized lower incomplete gamma function P(a, x) = gamma(a,x)/Gamma(a)
/// for integer a >= 1, x >= 0. Series expansion for x < a + 1, modified
/// Lentz continued fraction otherwise; relative error below 1e-12.
double reg_gamma_lower(int a, double x);

/// Pr{ log2(1 + sum of m i.i.d. exponential SNRs) / (2 max_tx) < r }.
/// Exact RTD accumulated-MI CDF; 0 for r <= 0, saturates to 1 when the
/// threshold SNR overflows.
double cdf_mi_rtd(int m, int max_tx, const FadingSpec& spec, double r);

/// Complementary CDF of the eavesdropper's RTD accumulated MI; 1 for r <= 0.
double ccdf_mi_eve_rtd(int m, int max_tx, const FadingSpec& spec, double r);

}  // namespace shrq
