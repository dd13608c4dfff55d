// Timing comparison of the three U-statistic evaluation paths on WBEDD draws:
// serial brute force, OpenMP brute force, and the closed-form Gram route.
#include <chrono>
#include <cstdio>
#include <vector>

#include "bixu/fast_ustat.hpp"
#include "bixu/kernels.hpp"
#include "bixu/wbedd.hpp"

namespace {

double time_ms(const std::function<double()>& fn, double* value) {
  const auto t0 = std::chrono::steady_clock::now();
  *value = fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  bixu::WbeddParams params;
  params.lambda = 1.0;
  params.alpha_f = bixu::alpha_for_moment(3.0);
  params.alpha_g = bixu::alpha_for_moment(2.0);

  const std::vector<std::pair<int, int>> brute_sizes = {{40, 40}, {80, 80}, {120, 120}};
  std::printf("%-10s %-8s %14s %14s %14s\n", "size", "kernel", "serial_ms", "omp_ms", "fast_ms");
  for (auto [m, n] : brute_sizes) {
    const auto y = bixu::sample_network(params, m, n, 42);
    for (auto id : {bixu::KernelId::H1, bixu::KernelId::H2, bixu::KernelId::H4}) {
      const auto kernel = bixu::named_kernel(id);
      double v_serial, v_omp, v_fast;
      const double t_serial = time_ms([&] { return bixu::ustat_bruteforce_serial(y, kernel); }, &v_serial);
      const double t_omp = time_ms([&] { return bixu::ustat_bruteforce(y, kernel); }, &v_omp);
      const double t_fast = time_ms([&] { return bixu::ustat_fast(y, id); }, &v_fast);
      const double rel = std::abs(v_fast - v_serial) / (1.0 + std::abs(v_serial));
      std::printf("%4dx%-5d %-8s %14.3f %14.3f %14.3f   rel_err=%.2e omp_match=%s\n", m, n,
                  bixu::kernel_name(id), t_serial, t_omp, t_fast, rel,
                  v_omp == v_serial ? "exact" : "DIFF");
    }
  }

  // large case: closed form only, the per-kernel budget check
  const auto big = bixu::sample_network(params, 2000, 2000, 7);
  for (auto id : {bixu::KernelId::H1, bixu::KernelId::H2, bixu::KernelId::H3, bixu::KernelId::H4,
                  bixu::KernelId::H5, bixu::KernelId::H6}) {
    double v;
    const double t = time_ms([&] { return bixu::ustat_fast(big, id); }, &v);
    std::printf("2000x2000  %-8s %14s %14s %14.3f   value=%.10g\n", bixu::kernel_name(id), "-", "-",
                t, v);
  }
  return 0;
}
