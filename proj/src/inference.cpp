#include "bixu/inference.hpp"

#include <cmath>

#include "bixu/stats.hpp"

namespace bixu {

std::optional<CiVariant> parse_ci_variant(const std::string& name) {
  if (name == "v") return CiVariant::V;
  if (name == "vt") return CiVariant::VT;
  if (name == "vd") return CiVariant::VD;
  if (name == "vdt") return CiVariant::VDT;
  return std::nullopt;
}

const char* ci_variant_name(CiVariant v) {
  switch (v) {
    case CiVariant::V: return "v";
    case CiVariant::VT: return "vt";
    case CiVariant::VD: return "vd";
    case CiVariant::VDT: return "vdt";
  }
  return "v";
}

double f2_from(const UStats& u) {
  if (!(u.h2 > 0.0)) throw degenerate_input_error("estimate_f2: U^h2 must be > 0");
  return u.h1 / u.h2;
}

VarianceEstimate plugin_variance_from(const UStats& u, double c) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("plugin variance: c must lie in (0,1)");
  if (!(u.h2 > 0.0) || !(u.h3 > 0.0))
    throw degenerate_input_error("plugin variance: U^h2 and U^h3 must be > 0");
  const double value = (u.h4 * u.h2 * u.h2 / (u.h3 * u.h3) - u.h1 * u.h1) / c +
                       4.0 / (1.0 - c) * u.h1 * u.h1 * (u.h3 / u.h2 - 1.0);
  return {value, value > 0.0};
}

VarianceEstimate delta_variance_from(const UStats& u, double c) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("delta variance: c must lie in (0,1)");
  if (!(u.h2 > 0.0) || !(u.h3 > 0.0) || !(u.h5 > 0.0))
    throw degenerate_input_error("delta variance: U^h2, U^h3 and U^h5 must be > 0");
  const double theta = u.h1 / u.h2;
  const double value =
      (u.h4 / (u.h3 * u.h3) +
       theta * (4.0 * theta * theta - theta - 4.0 * u.h6 / (u.h5 * u.h3))) /
      c;
  return {value, value > 0.0};
}

double estimate_f2(const BipartiteNetwork& y) { return f2_from(all_ustats(y)); }

VarianceEstimate estimate_variance_plugin(const BipartiteNetwork& y, double c) {
  return plugin_variance_from(all_ustats(y), c);
}

VarianceEstimate estimate_variance_delta(const BipartiteNetwork& y, double c) {
  return delta_variance_from(all_ustats(y), c);
}

namespace {

Interval interval_from(const UStats& u, int n_index, double alpha, CiVariant variant, double c,
                       const std::optional<TrueParams>& truth) {
  if (n_index < 1) throw dimension_error("confidence_interval: N = m + n - 4 must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("confidence_interval: alpha must lie in (0,1)");
  const bool needs_truth = variant == CiVariant::VT || variant == CiVariant::VDT;
  if (needs_truth && !truth)
    throw domain_error("confidence_interval: vt/vdt variants require true parameters");

  const double theta = f2_from(u);
  const double q = normal_quantile(1.0 - alpha / 2.0);
  const double sqrt_n = std::sqrt(static_cast<double>(n_index));
  double half_width = 0.0;
  switch (variant) {
    case CiVariant::V: {
      const VarianceEstimate v = plugin_variance_from(u, c);
      if (!v.valid) throw invalid_variance_error("confidence_interval: V-hat is not positive");
      half_width = q * std::sqrt(v.value) / (u.h2 * sqrt_n);
      break;
    }
    case CiVariant::VT: {
      const VarianceSet vs = theoretical_variances(truth->lambda, truth->moments, truth->c);
      if (vs.v < 0.0) throw invalid_variance_error("confidence_interval: true V is negative");
      half_width = q * std::sqrt(vs.v) / (u.h2 * sqrt_n);
      break;
    }
    case CiVariant::VD: {
      const VarianceEstimate v = delta_variance_from(u, c);
      if (!v.valid) throw invalid_variance_error("confidence_interval: V-delta-hat is not positive");
      half_width = q * std::sqrt(v.value / n_index);
      break;
    }
    case CiVariant::VDT: {
      const VarianceSet vs = theoretical_variances(truth->lambda, truth->moments, truth->c);
      if (vs.v_delta < 0.0) throw invalid_variance_error("confidence_interval: true V-delta is negative");
      half_width = q * std::sqrt(vs.v_delta / n_index);
      break;
    }
  }
  return {theta - half_width, theta + half_width};
}

}  // namespace

Interval confidence_interval(const BipartiteNetwork& y, double alpha, CiVariant variant,
                             const std::optional<TrueParams>& truth) {
  return interval_from(all_ustats(y), y.n_index(), alpha, variant, y.c_hat(), truth);
}

double generic_asymptotic_variance(const BipartiteNetwork& y, const QuadrupletKernel& kernel,
                                   double c, std::int64_t budget, std::uint64_t seed) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("generic_asymptotic_variance: c must lie in (0,1)");
  const double cov_row = ustat_pair_covariance(y, kernel, PairOverlap::OneRow, budget, seed);
  const double cov_col = ustat_pair_covariance(y, kernel, PairOverlap::OneCol, budget, seed);
  return 4.0 / c * cov_row + 4.0 / (1.0 - c) * cov_col;
}

F2Report full_report(const BipartiteNetwork& y, double alpha,
                     const std::optional<TrueParams>& truth, std::optional<double> c_override) {
  const UStats u = all_ustats(y);
  const double c = c_override.value_or(y.c_hat());
  F2Report report;
  report.u_stats = u;
  report.theta_hat = f2_from(u);
  report.n_index = y.n_index();
  report.c_hat = c;
  try {
    report.v_hat = plugin_variance_from(u, c);
  } catch (const degenerate_input_error&) {
    report.v_hat = {0.0, false};
  }
  try {
    report.v_delta_hat = delta_variance_from(u, c);
  } catch (const degenerate_input_error&) {
    report.v_delta_hat = {0.0, false};
  }
  const CiVariant variants[] = {CiVariant::V, CiVariant::VT, CiVariant::VD, CiVariant::VDT};
  for (CiVariant variant : variants) {
    const auto idx = static_cast<std::size_t>(variant);
    try {
      report.ci[idx] = interval_from(u, report.n_index, alpha, variant, c, truth);
    } catch (const std::exception&) {
      report.ci[idx] = std::nullopt;
    }
  }
  return report;
}

}  // namespace bixu
