#include "bixu/wbedd.hpp"

#include <cmath>
#include <vector>

#include "bixu/rng.hpp"

namespace bixu {

void WbeddParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw domain_error("WbeddParams: lambda must be > 0");
  if (alpha_f < 0.0 || alpha_g < 0.0) throw domain_error("WbeddParams: power exponents must be >= 0");
  if (version == WbeddVersion::RandomLambda) {
    if (!random_lambda_law) throw domain_error("WbeddParams: version 2 requires a random lambda law");
    if (random_lambda_law->kind == LambdaLaw::Kind::Gamma && !(random_lambda_law->gamma_shape > 0.0))
      throw domain_error("WbeddParams: gamma shape must be > 0");
  }
}

double power_law_moment(double alpha, int k) {
  if (alpha < 0.0) throw domain_error("power_law_moment: alpha must be >= 0");
  if (k < 1) throw domain_error("power_law_moment: k must be >= 1");
  return std::pow(alpha + 1.0, k) / (k * alpha + 1.0);
}

double alpha_for_moment(double f2_target) {
  if (!(f2_target >= 1.0)) throw domain_error("alpha_for_moment: F2 must be >= 1");
  return (f2_target - 1.0) + std::sqrt(f2_target * (f2_target - 1.0));
}

TrueMoments moments_of(const WbeddParams& params) {
  return {power_law_moment(params.alpha_f, 2), power_law_moment(params.alpha_f, 3),
          power_law_moment(params.alpha_f, 4), power_law_moment(params.alpha_g, 2)};
}

BipartiteNetwork sample_network(const WbeddParams& params, int m, int n, std::uint64_t seed) {
  params.validate();
  if (m < 1 || n < 1) throw dimension_error("sample_network: m and n must be >= 1");

  double lambda = params.lambda;
  if (params.version == WbeddVersion::RandomLambda &&
      params.random_lambda_law->kind == LambdaLaw::Kind::Gamma) {
    Rng lambda_rng(derive_seed({seed, 1}));
    const double shape = params.random_lambda_law->gamma_shape;
    lambda = lambda_rng.gamma(shape, params.lambda / shape);
  }

  Rng rng(derive_seed({seed, 0}));
  std::vector<double> f_of_xi(static_cast<std::size_t>(m));
  std::vector<double> g_of_eta(static_cast<std::size_t>(n));
  for (auto& v : f_of_xi) v = (params.alpha_f + 1.0) * std::pow(rng.uniform(), params.alpha_f);
  for (auto& v : g_of_eta) v = (params.alpha_g + 1.0) * std::pow(rng.uniform(), params.alpha_g);

  BipartiteNetwork y(m, n);
  for (int i = 0; i < m; ++i) {
    const double row_mean = lambda * f_of_xi[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
      y(i, j) = static_cast<double>(rng.poisson(row_mean * g_of_eta[static_cast<std::size_t>(j)]));
  }
  return y;
}

VarianceSet theoretical_variances(double lambda, const TrueMoments& mom, double c) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("theoretical_variances: c must lie in (0,1)");
  if (!(lambda > 0.0)) throw domain_error("theoretical_variances: lambda must be > 0");
  const double l4 = lambda * lambda * lambda * lambda;
  const double rc = 1.0 / c;
  const double rd = 1.0 / (1.0 - c);
  const double f2 = mom.f2, f3 = mom.f3, f4 = mom.f4, g2 = mom.g2;

  VarianceSet out;
  out.v_h1 = l4 * rc * (f4 - f2 * f2) + 4.0 * l4 * rd * f2 * f2 * (g2 - 1.0);
  // The c^-1 term carries the same factor 4 as the others; it follows from
  // 4/c * Cov(h2(Y_{1,2;1,2}), h2(Y_{1,3;3,4})) with Cov = lambda^4 (F2 - 1),
  // and it is the version under which v_delta below matches the delta-method
  // combination identically.
  out.v_h2 = 4.0 * l4 * rc * (f2 - 1.0) + 4.0 * l4 * rd * (g2 - 1.0);
  out.c_h1h2 = 2.0 * l4 * rc * (f3 - f2) + 4.0 * l4 * rd * f2 * (g2 - 1.0);
  out.v = out.v_h1;
  out.v_delta = rc * (f4 + f2 * (4.0 * f2 * f2 - f2 - 4.0 * f3));

  // Internal consistency: the delta-method combination equals the closed form.
  const double combo = (out.v_h1 - 2.0 * f2 * out.c_h1h2 + f2 * f2 * out.v_h2) / l4;
  const double scale = 1.0 + std::abs(out.v_delta);
  if (std::abs(combo - out.v_delta) > 1e-12 * scale)
    throw std::logic_error("theoretical_variances: delta-method identity violated");
  return out;
}

}  // namespace bixu
