#ifndef BIXU_COMPARISON_HPP_
#define BIXU_COMPARISON_HPP_

#include "bixu/network.hpp"
#include "bixu/wbedd.hpp"

namespace bixu {

struct ComparisonReport {
  double delta_hat;   // theta-hat(A) - theta-hat(B)
  double z;           // test statistic Z_N
  double p_value;     // two-sided normal p-value
  bool reject;        // |z| > q_{1 - alpha/2}
  int n_total;        // N = N_A + N_B
  double rho;         // N_A / N
};

/// Two-sided test of equal row heterogeneity (F2) of two independent networks.
ComparisonReport compare_f2(const BipartiteNetwork& a, const BipartiteNetwork& b, double alpha);

/// One side of the comparison: true generative parameters of a network.
struct SideParams {
  double lambda;
  TrueMoments moments;
  double c;
};

/// Asymptotic probability that the comparison statistic falls in the
/// acceptance interval; the test's power is 1 minus this value.
double theoretical_power(const SideParams& a, const SideParams& b, int n_total, double rho,
                         double alpha);

}  // namespace bixu

#endif  // BIXU_COMPARISON_HPP_
