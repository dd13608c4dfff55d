#ifndef BIXU_DIMS_HPP_
#define BIXU_DIMS_HPP_

#include <cmath>
#include <cstdint>
#include <utility>

#include "bixu/errors.hpp"

namespace bixu {

enum class StepKind { RowAdded, ColAdded };

/// Dimension sequence m_N = 2 + floor(c(N+1)), n_N = 2 + floor((1-c)(N+1)).
/// m + n = N + 4 whenever c(N+1) is not an integer.
inline std::pair<std::int64_t, std::int64_t> dims_sequence(double c, std::int64_t n_index) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("dims_sequence: c must lie in (0,1)");
  if (n_index < 0) throw domain_error("dims_sequence: N must be >= 0");
  const double t = static_cast<double>(n_index + 1);
  const std::int64_t m = 2 + static_cast<std::int64_t>(std::floor(c * t));
  const std::int64_t n = 2 + static_cast<std::int64_t>(std::floor((1.0 - c) * t));
  return {m, n};
}

/// Which dimension grew at step N (exactly one does, for irrational c).
inline StepKind step_kind(double c, std::int64_t n_index) {
  if (n_index < 1) throw domain_error("step_kind: N must be >= 1");
  const auto prev = dims_sequence(c, n_index - 1);
  const auto cur = dims_sequence(c, n_index);
  const bool row = cur.first == prev.first + 1;
  const bool col = cur.second == prev.second + 1;
  if (row == col) throw domain_error("step_kind: increment is not a partition (rational c?)");
  return row ? StepKind::RowAdded : StepKind::ColAdded;
}

/// kappa_c(m) = floor((m-2)/c); inverts the dimension sequence on row-added steps.
inline std::int64_t kappa(double c, std::int64_t m) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("kappa: c must lie in (0,1)");
  if (m < 3) throw domain_error("kappa: m must be >= 3");
  return static_cast<std::int64_t>(std::floor(static_cast<double>(m - 2) / c));
}

}  // namespace bixu

#endif  // BIXU_DIMS_HPP_
