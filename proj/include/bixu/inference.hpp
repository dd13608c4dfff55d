#ifndef BIXU_INFERENCE_HPP_
#define BIXU_INFERENCE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "bixu/fast_ustat.hpp"
#include "bixu/kernels.hpp"
#include "bixu/network.hpp"
#include "bixu/wbedd.hpp"

namespace bixu {

enum class CiVariant { V, VT, VD, VDT };

std::optional<CiVariant> parse_ci_variant(const std::string& name);
const char* ci_variant_name(CiVariant v);

struct Interval {
  double lo, hi;
};

/// Known generative parameters, needed for the vt/vdt interval variants.
struct TrueParams {
  double lambda;
  TrueMoments moments;
  double c;
};

/// Variance estimate carrying a validity flag; small-sample estimates can be
/// negative and are returned as-is, not clamped.
struct VarianceEstimate {
  double value;
  bool valid;
};

double f2_from(const UStats& u);
VarianceEstimate plugin_variance_from(const UStats& u, double c);
VarianceEstimate delta_variance_from(const UStats& u, double c);

/// theta-hat = U^h1 / U^h2, the plug-in estimator of F2.
double estimate_f2(const BipartiteNetwork& y);

/// V-hat, the plug-in estimator of the asymptotic variance of sqrt(N) U^h1.
VarianceEstimate estimate_variance_plugin(const BipartiteNetwork& y, double c);

/// V-delta-hat, the delta-method estimator of the variance of sqrt(N) theta-hat.
VarianceEstimate estimate_variance_delta(const BipartiteNetwork& y, double c);

/// Asymptotic CI for F2 at miscoverage alpha. Variants: v / vd use estimated
/// variances, vt / vdt the true ones (truth required).
Interval confidence_interval(const BipartiteNetwork& y, double alpha, CiVariant variant,
                             const std::optional<TrueParams>& truth = std::nullopt);

/// Kernel-agnostic variance: 4/c Cov_(1,0) + 4/(1-c) Cov_(0,1) by empirical
/// pair covariances. Fallback when no closed form exists.
double generic_asymptotic_variance(const BipartiteNetwork& y, const QuadrupletKernel& kernel,
                                   double c, std::int64_t budget, std::uint64_t seed = 0);

/// Everything the estimation pipeline produces for one network.
struct F2Report {
  double theta_hat;
  UStats u_stats;
  VarianceEstimate v_hat;
  VarianceEstimate v_delta_hat;
  std::array<std::optional<Interval>, 4> ci;  // indexed by CiVariant
  int n_index;
  double c_hat;
};

F2Report full_report(const BipartiteNetwork& y, double alpha,
                     const std::optional<TrueParams>& truth = std::nullopt,
                     std::optional<double> c_override = std::nullopt);

}  // namespace bixu

#endif  // BIXU_INFERENCE_HPP_
