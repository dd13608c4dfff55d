#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bixu/comparison.hpp"
#include "bixu/wbedd.hpp"

using namespace bixu;

namespace {

BipartiteNetwork draw(double f2, double g2, int m, int n, std::uint64_t seed) {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(f2);
  p.alpha_g = alpha_for_moment(g2);
  return sample_network(p, m, n, seed);
}

SideParams side(double f2, double g2, double c) {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(f2);
  p.alpha_g = alpha_for_moment(g2);
  return {1.0, moments_of(p), c};
}

}  // namespace

TEST_CASE("identical inputs give z = 0 and no rejection") {
  const auto y = draw(3.0, 2.0, 40, 40, 2);
  const auto r = compare_f2(y, y, 0.05);
  CHECK(r.delta_hat == 0.0);
  CHECK(r.z == 0.0);
  CHECK(r.p_value == doctest::Approx(1.0));
  CHECK(!r.reject);
  CHECK(r.n_total == 2 * y.n_index());
  CHECK(r.rho == doctest::Approx(0.5));
}

TEST_CASE("antisymmetry in the argument order") {
  const auto a = draw(3.0, 2.0, 40, 40, 5);
  const auto b = draw(4.0, 2.0, 36, 44, 6);
  const auto rab = compare_f2(a, b, 0.05);
  const auto rba = compare_f2(b, a, 0.05);
  CHECK(rab.z == doctest::Approx(-rba.z).epsilon(1e-12));
  CHECK(rab.p_value == doctest::Approx(rba.p_value).epsilon(1e-12));
  CHECK(rab.reject == rba.reject);
  CHECK(rab.rho == doctest::Approx(1.0 - rba.rho).epsilon(1e-12));
}

TEST_CASE("reject flag is consistent with the p-value") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto a = draw(3.0, 2.0, 34, 34, 100 + s);
    const auto b = draw(5.0, 2.0, 34, 34, 200 + s);
    const auto r = compare_f2(a, b, 0.05);
    CHECK(r.reject == (r.p_value < 0.05));
  }
}

TEST_CASE("theoretical power endpoints") {
  const auto sa = side(3.0, 2.0, 0.5);
  CHECK(theoretical_power(sa, sa, 1024, 0.5, 0.05) == doctest::Approx(0.95).epsilon(1e-12));

  // Acceptance probability vanishes as the separation grows.
  const auto far = side(40.0, 2.0, 0.5);
  CHECK(theoretical_power(sa, far, 4096, 0.5, 0.05) < 1e-3);
  CHECK(theoretical_power(sa, far, 65536, 0.5, 0.05) <
        theoretical_power(sa, far, 4096, 0.5, 0.05));
}

TEST_CASE("psi decreases with separation and with N") {
  const auto sa = side(3.0, 2.0, 0.5);
  double prev = 1.0;
  for (double f2b : {3.5, 4.0, 4.5, 5.0, 6.0}) {
    const double psi = theoretical_power(sa, side(f2b, 2.0, 0.5), 1024, 0.5, 0.05);
    CHECK(psi < prev);
    prev = psi;
  }
  const auto sb = side(4.0, 2.0, 0.5);
  prev = 1.0;
  for (int n : {128, 256, 512, 1024, 2048}) {
    const double psi = theoretical_power(sa, sb, n, 0.5, 0.05);
    CHECK(psi < prev);
    prev = psi;
  }
}

TEST_CASE("parameter validation") {
  const auto sa = side(3.0, 2.0, 0.5);
  CHECK_THROWS_AS(theoretical_power(sa, sa, 0, 0.5, 0.05), domain_error);
  CHECK_THROWS_AS(theoretical_power(sa, sa, 64, 0.0, 0.05), domain_error);
  CHECK_THROWS_AS(theoretical_power(sa, sa, 64, 0.5, 1.5), domain_error);
}
