#include "bixu/kernels.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "bixu/rng.hpp"

namespace bixu {

namespace {

bool is_binary(double v) { return v == 0.0 || v == 1.0; }

double eval_h1(const Quadruplet& q) { return 0.5 * (q.y11 * q.y12 + q.y21 * q.y22); }
double eval_h2(const Quadruplet& q) { return 0.5 * (q.y11 * q.y22 + q.y12 * q.y21); }
double eval_h3(const Quadruplet& q) { return 0.5 * (q.y11 * q.y21 + q.y12 * q.y22); }

double eval_h4(const Quadruplet& q) {
  const double a = q.y11 * q.y11 - q.y11;
  const double b = q.y12 * q.y12 - q.y12;
  const double c = q.y21 * q.y21 - q.y21;
  const double d = q.y22 * q.y22 - q.y22;
  return 0.5 * (a * b + c * d);
}

double eval_h5(const Quadruplet& q) { return 0.25 * (q.y11 + q.y12 + q.y21 + q.y22); }

double eval_h6(const Quadruplet& q) {
  return 0.25 * (q.y11 * q.y12 * (q.y11 + q.y12 - 2.0) + q.y21 * q.y22 * (q.y21 + q.y22 - 2.0));
}

double eval_product_form(const Quadruplet& q) {
  return 0.25 * q.y11 * q.y22 * (q.y11 + q.y22 - q.y12 - q.y21 - 2.0) +
         0.25 * q.y12 * q.y21 * (q.y12 + q.y21 - q.y11 - q.y22 - 2.0);
}

double eval_motif5(const Quadruplet& q) {
  if (!is_binary(q.y11) || !is_binary(q.y12) || !is_binary(q.y21) || !is_binary(q.y22))
    throw domain_error("motif5 kernel requires a binary quadruplet");
  return q.y11 * q.y12 * q.y21 * (1.0 - q.y22) + q.y11 * q.y12 * q.y22 * (1.0 - q.y21) +
         q.y11 * q.y21 * q.y22 * (1.0 - q.y12) + q.y12 * q.y21 * q.y22 * (1.0 - q.y11);
}

}  // namespace

const char* kernel_name(KernelId id) {
  switch (id) {
    case KernelId::H1: return "h1";
    case KernelId::H2: return "h2";
    case KernelId::H3: return "h3";
    case KernelId::H4: return "h4";
    case KernelId::H5: return "h5";
    case KernelId::H6: return "h6";
    case KernelId::ProductForm: return "product-form";
    case KernelId::Motif5: return "motif5";
    case KernelId::Custom: return "custom";
  }
  return "custom";
}

std::optional<KernelId> parse_kernel_id(const std::string& name) {
  if (name == "h1") return KernelId::H1;
  if (name == "h2") return KernelId::H2;
  if (name == "h3") return KernelId::H3;
  if (name == "h4") return KernelId::H4;
  if (name == "h5") return KernelId::H5;
  if (name == "h6") return KernelId::H6;
  if (name == "product-form") return KernelId::ProductForm;
  if (name == "motif5") return KernelId::Motif5;
  return std::nullopt;
}

QuadrupletKernel named_kernel(KernelId id) {
  QuadrupletKernel k;
  k.id = id;
  k.name = kernel_name(id);
  switch (id) {
    case KernelId::H1: k.eval = eval_h1; break;
    case KernelId::H2: k.eval = eval_h2; break;
    case KernelId::H3: k.eval = eval_h3; break;
    case KernelId::H4: k.eval = eval_h4; break;
    case KernelId::H5: k.eval = eval_h5; break;
    case KernelId::H6: k.eval = eval_h6; break;
    case KernelId::ProductForm: k.eval = eval_product_form; break;
    case KernelId::Motif5: k.eval = eval_motif5; break;
    case KernelId::Custom: throw domain_error("named_kernel: no built-in evaluator for Custom");
  }
  return k;
}

QuadrupletKernel symmetrize(std::function<double(const Quadruplet&)> raw) {
  QuadrupletKernel k;
  k.id = KernelId::Custom;
  k.name = "symmetrized";
  k.eval = [raw = std::move(raw)](const Quadruplet& q) {
    const Quadruplet row_swap{q.y21, q.y22, q.y11, q.y12};
    const Quadruplet col_swap{q.y12, q.y11, q.y22, q.y21};
    const Quadruplet both{q.y22, q.y21, q.y12, q.y11};
    return 0.25 * (raw(q) + raw(row_swap) + raw(col_swap) + raw(both));
  };
  return k;
}

namespace {

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = v - comp;
    const double s = sum + t;
    comp = (s - sum) - t;
    sum = s;
  }
};

void require_quadruplet_dims(const BipartiteNetwork& y) {
  if (y.rows() < 2 || y.cols() < 2)
    throw dimension_error("U-statistic requires at least a 2x2 matrix");
}

// Sums kernel values over all column pairs for the fixed row pair (i1, i2).
double row_pair_sum(const BipartiteNetwork& y, const QuadrupletKernel& kernel, int i1, int i2) {
  const int n = y.cols();
  const double* r1 = y.row(i1);
  const double* r2 = y.row(i2);
  KahanSum acc;
  for (int j1 = 0; j1 + 1 < n; ++j1) {
    for (int j2 = j1 + 1; j2 < n; ++j2) {
      acc.add(kernel({r1[j1], r1[j2], r2[j1], r2[j2]}));
    }
  }
  return acc.sum;
}

double pair_count_inverse(const BipartiteNetwork& y) {
  const double m = y.rows();
  const double n = y.cols();
  return 4.0 / (m * (m - 1.0) * n * (n - 1.0));
}

}  // namespace

double ustat_bruteforce_serial(const BipartiteNetwork& y, const QuadrupletKernel& kernel) {
  require_quadruplet_dims(y);
  KahanSum acc;
  for (int i1 = 0; i1 + 1 < y.rows(); ++i1)
    for (int i2 = i1 + 1; i2 < y.rows(); ++i2) acc.add(row_pair_sum(y, kernel, i1, i2));
  return acc.sum * pair_count_inverse(y);
}

double ustat_bruteforce(const BipartiteNetwork& y, const QuadrupletKernel& kernel) {
  require_quadruplet_dims(y);
  const int m = y.rows();
  const std::int64_t pairs = static_cast<std::int64_t>(m) * (m - 1) / 2;
  std::vector<double> partial(static_cast<std::size_t>(pairs));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t p = 0; p < pairs; ++p) {
    // Unrank p -> (i1, i2) with i1 < i2: i2 is the largest t with t(t-1)/2 <= p.
    std::int64_t i2 =
        static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) * 0.5);
    while (i2 > 1 && i2 * (i2 - 1) / 2 > p) --i2;
    while ((i2 + 1) * i2 / 2 <= p) ++i2;
    const std::int64_t i1 = p - i2 * (i2 - 1) / 2;
    partial[static_cast<std::size_t>(p)] =
        row_pair_sum(y, kernel, static_cast<int>(i1), static_cast<int>(i2));
  }
  KahanSum acc;
  for (double v : partial) acc.add(v);
  return acc.sum * pair_count_inverse(y);
}

namespace {

// Ordered tuple spaces for pairs of quadruplets sharing exactly one row
// (and no column). The column case is handled by transposing access.
struct IndexView {
  const BipartiteNetwork* y;
  bool transposed;
  int rows() const { return transposed ? y->cols() : y->rows(); }
  int cols() const { return transposed ? y->rows() : y->cols(); }
  double at(int i, int j) const { return transposed ? (*y)(j, i) : (*y)(i, j); }
};

// Builds the quadruplet in the orientation of the original matrix. A plain
// transpose would change the kernel (h1 and h3 swap, for instance), so for
// the column-overlap view the shared-axis indices (i1, i2) select columns
// while (j1, j2) select rows.
Quadruplet view_quadruplet(const IndexView& v, int i1, int i2, int j1, int j2) {
  if (!v.transposed) return {v.y->operator()(i1, j1), v.y->operator()(i1, j2),
                             v.y->operator()(i2, j1), v.y->operator()(i2, j2)};
  return {v.y->operator()(j1, i1), v.y->operator()(j1, i2),
          v.y->operator()(j2, i1), v.y->operator()(j2, i2)};
}

}  // namespace

double ustat_pair_covariance(const BipartiteNetwork& y, const QuadrupletKernel& kernel,
                             PairOverlap overlap, std::int64_t budget, std::uint64_t seed) {
  // "Rows" below are the shared axis: actual rows for OneRow, columns for OneCol.
  IndexView v{&y, overlap == PairOverlap::OneCol};
  const int m = v.rows();
  const int n = v.cols();
  if (m < 3 || n < 4)
    throw dimension_error("ustat_pair_covariance: need >= 3 shared-axis and >= 4 other-axis indices");
  if (budget < 1) throw domain_error("ustat_pair_covariance: budget must be >= 1");

  const double u = ustat_bruteforce(y, kernel);

  // Tuples: shared row a; b != c, both != a; {j1<j2} and {j3<j4} disjoint.
  const double col_pairs = 0.5 * n * (n - 1.0);
  const double disjoint_col_pairs = 0.5 * (n - 2.0) * (n - 3.0);
  const double total = static_cast<double>(m) * (m - 1.0) * (m - 2.0) * col_pairs * disjoint_col_pairs;

  KahanSum acc;
  std::int64_t count = 0;
  if (total <= static_cast<double>(budget)) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        for (int c = 0; c < m; ++c) {
          if (c == a || c == b) continue;
          for (int j1 = 0; j1 + 1 < n; ++j1)
            for (int j2 = j1 + 1; j2 < n; ++j2) {
              const double h1v = kernel(view_quadruplet(v, a, b, j1, j2));
              for (int j3 = 0; j3 + 1 < n; ++j3) {
                if (j3 == j1 || j3 == j2) continue;
                for (int j4 = j3 + 1; j4 < n; ++j4) {
                  if (j4 == j1 || j4 == j2) continue;
                  acc.add(h1v * kernel(view_quadruplet(v, a, c, j3, j4)));
                  ++count;
                }
              }
            }
        }
      }
  } else {
    Rng rng(derive_seed({seed, 0xc0u + static_cast<std::uint64_t>(overlap == PairOverlap::OneCol)}));
    auto pick = [&](int bound) { return static_cast<int>(rng.bits() % static_cast<std::uint64_t>(bound)); };
    for (std::int64_t s = 0; s < budget; ++s) {
      const int a = pick(m);
      int b = pick(m);
      while (b == a) b = pick(m);
      int c = pick(m);
      while (c == a || c == b) c = pick(m);
      int j[4];
      for (int t = 0; t < 4; ++t) {
        bool fresh = false;
        while (!fresh) {
          j[t] = pick(n);
          fresh = true;
          for (int s2 = 0; s2 < t; ++s2) fresh = fresh && j[t] != j[s2];
        }
      }
      const int j1 = std::min(j[0], j[1]), j2 = std::max(j[0], j[1]);
      const int j3 = std::min(j[2], j[3]), j4 = std::max(j[2], j[3]);
      acc.add(kernel(view_quadruplet(v, a, b, j1, j2)) * kernel(view_quadruplet(v, a, c, j3, j4)));
      ++count;
    }
  }
  if (count == 0) throw dimension_error("ustat_pair_covariance: no valid tuple pair");
  return acc.sum / static_cast<double>(count) - u * u;
}

}  // namespace bixu
