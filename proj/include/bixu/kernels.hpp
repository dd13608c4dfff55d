#ifndef BIXU_KERNELS_HPP_
#define BIXU_KERNELS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "bixu/network.hpp"

namespace bixu {

enum class KernelId { H1, H2, H3, H4, H5, H6, ProductForm, Motif5, Custom };

/// Symmetric real function of a quadruplet: invariant under swapping the two
/// rows, the two columns, or both.
struct QuadrupletKernel {
  KernelId id = KernelId::Custom;
  std::string name = "custom";
  std::function<double(const Quadruplet&)> eval;

  double operator()(const Quadruplet& q) const { return eval(q); }
};

QuadrupletKernel named_kernel(KernelId id);
std::optional<KernelId> parse_kernel_id(const std::string& name);
const char* kernel_name(KernelId id);

/// Averages a raw quadruplet function over the four row/column orderings.
/// The result satisfies the symmetry condition and keeps the raw expectation.
QuadrupletKernel symmetrize(std::function<double(const Quadruplet&)> raw);

/// Reference U-statistic: explicit O(m^2 n^2) enumeration, serial, Kahan sum.
double ustat_bruteforce_serial(const BipartiteNetwork& y, const QuadrupletKernel& kernel);

/// Same value, row-pair partials evaluated in parallel. Partial sums are
/// stored per row pair and reduced in a fixed order, so the result is
/// bit-identical for any thread count.
double ustat_bruteforce(const BipartiteNetwork& y, const QuadrupletKernel& kernel);

enum class PairOverlap { OneRow, OneCol };

/// Empirical Cov(h(q), h(q')) over quadruplet pairs sharing exactly one row
/// and no column (or one column and no row). Enumerates fully when the tuple
/// count fits the budget, otherwise draws `budget` uniform tuples.
double ustat_pair_covariance(const BipartiteNetwork& y, const QuadrupletKernel& kernel,
                             PairOverlap overlap, std::int64_t budget, std::uint64_t seed = 0);

}  // namespace bixu

#endif  // BIXU_KERNELS_HPP_
