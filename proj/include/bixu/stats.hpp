#ifndef BIXU_STATS_HPP_
#define BIXU_STATS_HPP_

#include <cmath>
#include <utility>

#include "bixu/errors.hpp"

namespace bixu {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / 1.4142135623730950488); }

/// Inverse standard normal CDF: Acklam's rational approximation polished by
/// one Halley step against erfc, good to full double precision.
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw domain_error("normal_quantile: p must lie in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                             1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                             6.680131188771972e+01,  -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                             -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                             3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * 2.5066282746310002 * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

/// Exact central band for Z = X/K with X ~ Binomial(K, p): the smallest
/// quantile interval [q_{(1-level)/2}, q_{1-(1-level)/2}] of X, as frequencies.
inline std::pair<double, double> binomial_band(int trials, double p, double level) {
  if (trials < 1) throw domain_error("binomial_band: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("binomial_band: p must lie in [0,1]");
  if (!(level > 0.0 && level < 1.0)) throw domain_error("binomial_band: level must lie in (0,1)");
  if (p == 0.0) return {0.0, 0.0};
  if (p == 1.0) return {1.0, 1.0};
  const double tail = 0.5 * (1.0 - level);
  // Log-space pmf: the extreme tails underflow in plain doubles.
  const double log_p = std::log(p), log_q = std::log1p(-p);
  const double lg_n = std::lgamma(trials + 1.0);
  double cdf = 0.0;
  int lo = -1, hi = -1;
  for (int k = 0; k <= trials; ++k) {
    cdf += std::exp(lg_n - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0) + k * log_p +
                    (trials - k) * log_q);
    if (lo < 0 && cdf >= tail) lo = k;
    if (hi < 0 && cdf >= 1.0 - tail) hi = k;
  }
  if (lo < 0) lo = trials;
  if (hi < 0) hi = trials;
  return {static_cast<double>(lo) / trials, static_cast<double>(hi) / trials};
}

}  // namespace bixu

#endif  // BIXU_STATS_HPP_
