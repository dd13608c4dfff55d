#ifndef BIXU_NETWORK_HPP_
#define BIXU_NETWORK_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "bixu/errors.hpp"

namespace bixu {

/// Dense m x n matrix of nonnegative edge weights, the observed RCE matrix Y.
/// Row-major storage.
class BipartiteNetwork {
 public:
  BipartiteNetwork(int rows, int cols)
      : rows_(rows), cols_(cols), weights_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 1 || cols < 1) throw dimension_error("BipartiteNetwork: rows and cols must be >= 1");
  }

  BipartiteNetwork(int rows, int cols, std::vector<double> weights)
      : rows_(rows), cols_(cols), weights_(std::move(weights)) {
    if (rows < 1 || cols < 1) throw dimension_error("BipartiteNetwork: rows and cols must be >= 1");
    if (weights_.size() != static_cast<std::size_t>(rows) * cols)
      throw dimension_error("BipartiteNetwork: weight buffer does not match dimensions");
    validate();
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int i, int j) const { return weights_[static_cast<std::size_t>(i) * cols_ + j]; }
  double& operator()(int i, int j) { return weights_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& weights() const { return weights_; }

  const double* row(int i) const { return weights_.data() + static_cast<std::size_t>(i) * cols_; }

  /// Asymptotic step index N = m + n - 4.
  int n_index() const { return rows_ + cols_ - 4; }

  /// Observed row fraction c-hat = m / (m + n).
  double c_hat() const { return static_cast<double>(rows_) / (rows_ + cols_); }

  void validate() const {
    for (double w : weights_) {
      if (!std::isfinite(w)) throw domain_error("BipartiteNetwork: non-finite weight");
      if (w < 0.0) throw domain_error("BipartiteNetwork: negative weight");
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> weights_;
};

/// A 2x2 submatrix Y_{i1,i2;j1,j2}.
struct Quadruplet {
  double y11, y12, y21, y22;
};

inline Quadruplet quadruplet_at(const BipartiteNetwork& y, int i1, int i2, int j1, int j2) {
  return {y(i1, j1), y(i1, j2), y(i2, j1), y(i2, j2)};
}

}  // namespace bixu

#endif  // BIXU_NETWORK_HPP_
