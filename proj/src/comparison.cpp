#include "bixu/comparison.hpp"

#include <cmath>

#include "bixu/inference.hpp"
#include "bixu/stats.hpp"

namespace bixu {

ComparisonReport compare_f2(const BipartiteNetwork& a, const BipartiteNetwork& b, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("compare_f2: alpha must lie in (0,1)");
  const int n_a = a.n_index();
  const int n_b = b.n_index();
  if (n_a < 1 || n_b < 1) throw dimension_error("compare_f2: both networks need N >= 1");

  const UStats ua = all_ustats(a);
  const UStats ub = all_ustats(b);
  const VarianceEstimate va = delta_variance_from(ua, a.c_hat());
  const VarianceEstimate vb = delta_variance_from(ub, b.c_hat());
  if (!va.valid || !vb.valid)
    throw invalid_variance_error("compare_f2: a delta-method variance estimate is not positive");

  ComparisonReport r;
  r.n_total = n_a + n_b;
  r.rho = static_cast<double>(n_a) / r.n_total;
  r.delta_hat = f2_from(ua) - f2_from(ub);
  const double pooled = va.value / r.rho + vb.value / (1.0 - r.rho);
  r.z = std::sqrt(static_cast<double>(r.n_total) / pooled) * r.delta_hat;
  r.p_value = 2.0 * normal_cdf(-std::abs(r.z));
  r.reject = std::abs(r.z) > normal_quantile(1.0 - alpha / 2.0);
  return r;
}

double theoretical_power(const SideParams& a, const SideParams& b, int n_total, double rho,
                         double alpha) {
  if (n_total < 1) throw domain_error("theoretical_power: N must be >= 1");
  if (!(rho > 0.0 && rho < 1.0)) throw domain_error("theoretical_power: rho must lie in (0,1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("theoretical_power: alpha must lie in (0,1)");
  const VarianceSet va = theoretical_variances(a.lambda, a.moments, a.c);
  const VarianceSet vb = theoretical_variances(b.lambda, b.moments, b.c);
  const double pooled = va.v_delta / rho + vb.v_delta / (1.0 - rho);
  const double q = normal_quantile(1.0 - alpha / 2.0);
  if (pooled <= 0.0) {
    // Degenerate homogeneous sides: the statistic is a point mass at mu.
    return a.moments.f2 == b.moments.f2 ? 1.0 : 0.0;
  }
  const double mu = std::sqrt(static_cast<double>(n_total) / pooled) * (a.moments.f2 - b.moments.f2);
  return normal_cdf(q - mu) - normal_cdf(-q - mu);
}

}  // namespace bixu
