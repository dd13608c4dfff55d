#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bixu/fast_ustat.hpp"
#include "bixu/rng.hpp"

using namespace bixu;

namespace {

constexpr KernelId kSix[] = {KernelId::H1, KernelId::H2, KernelId::H3,
                             KernelId::H4, KernelId::H5, KernelId::H6};

BipartiteNetwork random_network(int m, int n, Rng& rng, bool integer_entries) {
  BipartiteNetwork y(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      y(i, j) = integer_entries ? static_cast<double>(rng.poisson(2.0)) : 3.0 * rng.uniform();
  return y;
}

}  // namespace

TEST_CASE("gram summary examples") {
  BipartiteNetwork ones(2, 3, std::vector<double>(6, 1.0));
  const auto g = gram_summary(ones);
  CHECK(g.grand_sum == doctest::Approx(6.0));
  CHECK(g.colgram_sum == doctest::Approx(18.0));
  CHECK(g.colgram_trace == doctest::Approx(6.0));
  CHECK(g.rowgram_sum == doctest::Approx(12.0));
  CHECK(g.rowgram_trace == doctest::Approx(6.0));
  CHECK(g.sq_sum == doctest::Approx(6.0));

  BipartiteNetwork zeros(3, 3);
  const auto gz = gram_summary(zeros);
  CHECK(gz.grand_sum == 0.0);
  CHECK(gz.colgram_sum == 0.0);
  CHECK(gz.tilde_colgram_sum == 0.0);

  BipartiteNetwork eye(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto ge = gram_summary(eye);
  CHECK(ge.grand_sum == doctest::Approx(2.0));
  CHECK(ge.colgram_sum == doctest::Approx(2.0));
  CHECK(ge.sq_sum == doctest::Approx(2.0));
}

TEST_CASE("trace identity holds on random input") {
  Rng rng(3);
  const auto y = random_network(6, 9, rng, false);
  const auto g = gram_summary(y);
  CHECK(g.colgram_trace == doctest::Approx(g.sq_sum).epsilon(1e-13));
  CHECK(g.rowgram_trace == doctest::Approx(g.sq_sum).epsilon(1e-13));
}

TEST_CASE("all-ones closed forms") {
  BipartiteNetwork ones(2, 3, std::vector<double>(6, 1.0));
  CHECK(ustat_fast(ones, KernelId::H1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ustat_fast(ones, KernelId::H2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ustat_fast(ones, KernelId::H5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ustat_fast(ones, KernelId::H4) == doctest::Approx(0.0));
}

TEST_CASE("fast matches the brute-force oracle on 200 random matrices") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng.uniform() * 8);
    const int n = 2 + static_cast<int>(rng.uniform() * 8);
    const auto y = random_network(m, n, rng, t % 2 == 1);
    const auto g = gram_summary(y);
    for (KernelId id : kSix) {
      const double fast = ustat_fast(g, m, n, id);
      const double brute = ustat_bruteforce(y, named_kernel(id));
      CHECK(std::abs(fast - brute) <= 1e-10 * (1.0 + std::abs(brute)));
    }
  }
}

TEST_CASE("permutation invariance") {
  Rng rng(21);
  const int m = 7, n = 5;
  const auto y = random_network(m, n, rng, false);
  std::vector<int> pr(m), pc(n);
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  for (int t = 0; t < 20; ++t) {
    for (int i = m - 1; i > 0; --i) std::swap(pr[i], pr[rng.bits() % (i + 1)]);
    for (int j = n - 1; j > 0; --j) std::swap(pc[j], pc[rng.bits() % (j + 1)]);
    BipartiteNetwork z(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = y(pr[i], pc[j]);
    for (KernelId id : kSix) {
      CHECK(ustat_fast(z, id) ==
            doctest::Approx(ustat_fast(y, id)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dimension errors") {
  BipartiteNetwork row(1, 4, std::vector<double>(4, 1.0));
  CHECK_THROWS_AS(ustat_fast(row, KernelId::H1), dimension_error);
  BipartiteNetwork col(4, 1, std::vector<double>(4, 1.0));
  CHECK_THROWS_AS(ustat_fast(col, KernelId::H3), dimension_error);
  BipartiteNetwork ok(2, 2, std::vector<double>(4, 1.0));
  CHECK_THROWS_AS(ustat_fast(ok, KernelId::ProductForm), domain_error);
}

TEST_CASE("all_ustats agrees with per-kernel calls") {
  Rng rng(77);
  const auto y = random_network(8, 6, rng, true);
  const auto u = all_ustats(y);
  CHECK(u.h1 == ustat_fast(y, KernelId::H1));
  CHECK(u.h2 == ustat_fast(y, KernelId::H2));
  CHECK(u.h3 == ustat_fast(y, KernelId::H3));
  CHECK(u.h4 == ustat_fast(y, KernelId::H4));
  CHECK(u.h5 == ustat_fast(y, KernelId::H5));
  CHECK(u.h6 == ustat_fast(y, KernelId::H6));
}
