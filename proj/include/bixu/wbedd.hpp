#ifndef BIXU_WBEDD_HPP_
#define BIXU_WBEDD_HPP_

#include <cstdint>
#include <optional>

#include "bixu/network.hpp"

namespace bixu {

/// Law of the per-network intensity in the random-intensity model version.
/// The mean is always WbeddParams::lambda; PointMass draws nothing, so a
/// point-mass version-2 run reproduces a version-1 run bit for bit.
struct LambdaLaw {
  enum class Kind { Gamma, PointMass };
  Kind kind = Kind::Gamma;
  double gamma_shape = 1.0;
};

enum class WbeddVersion { ConstantLambda, RandomLambda };

/// Generative parameters: Poisson edge law with mean lambda * f(xi) * g(eta),
/// f(u) = (alpha_f + 1) u^alpha_f and likewise g; both integrate to 1.
struct WbeddParams {
  double lambda = 1.0;
  double alpha_f = 0.0;
  double alpha_g = 0.0;
  WbeddVersion version = WbeddVersion::ConstantLambda;
  std::optional<LambdaLaw> random_lambda_law;

  void validate() const;
};

/// F_k = integral of f^k for the power-law degree function with exponent
/// alpha: (alpha+1)^k / (k*alpha + 1).
double power_law_moment(double alpha, int k);

/// Exponent whose power-law f has integral f^2 equal to f2_target:
/// the nonnegative root of (alpha+1)^2 = f2_target (2 alpha + 1).
double alpha_for_moment(double f2_target);

struct TrueMoments {
  double f2, f3, f4, g2;
};

TrueMoments moments_of(const WbeddParams& params);

/// One network draw. Order: xi_1..m, eta_1..n, entries row-major; the
/// random lambda (version 2) comes from a separate derived stream.
/// Deterministic per (params, m, n, seed) on every platform.
BipartiteNetwork sample_network(const WbeddParams& params, int m, int n, std::uint64_t seed);

/// Closed-form asymptotic variances for the F2 pipeline.
struct VarianceSet {
  double v_h1;      // variance of sqrt(N) U^h1
  double v_h2;      // variance of sqrt(N) U^h2
  double c_h1h2;    // their asymptotic covariance
  double v;         // alias of v_h1, the plug-in pipeline's V
  double v_delta;   // variance of sqrt(N) theta-hat (delta method)
};

VarianceSet theoretical_variances(double lambda, const TrueMoments& moments, double c);

}  // namespace bixu

#endif  // BIXU_WBEDD_HPP_
