#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bixu/inference.hpp"
#include "bixu/rng.hpp"

using namespace bixu;

namespace {

UStats exact_expectations(double lambda, const TrueMoments& m) {
  const double l2 = lambda * lambda;
  return {l2 * m.f2,                        // h1
          l2,                               // h2
          l2 * m.g2,                        // h3
          l2 * l2 * m.f4 * m.g2 * m.g2,     // h4
          lambda,                           // h5
          lambda * l2 * m.f3 * m.g2};       // h6
}

TrueMoments random_moments(Rng& rng, double* alpha_f_out = nullptr) {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(1.0 + 5.0 * rng.uniform());
  p.alpha_g = alpha_for_moment(1.0 + 3.0 * rng.uniform());
  if (alpha_f_out) *alpha_f_out = p.alpha_f;
  return moments_of(p);
}

}  // namespace

TEST_CASE("estimate_f2 basics") {
  BipartiteNetwork constant(4, 5, std::vector<double>(20, 2.7));
  CHECK(estimate_f2(constant) == doctest::Approx(1.0).epsilon(1e-13));

  Rng rng(31);
  BipartiteNetwork y(6, 7);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 7; ++j) y(i, j) = rng.poisson(2.0);
  const double theta = estimate_f2(y);
  BipartiteNetwork scaled(6, 7);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 7; ++j) scaled(i, j) = 3.25 * y(i, j);
  CHECK(estimate_f2(scaled) == doctest::Approx(theta).epsilon(1e-12));

  BipartiteNetwork zeros(4, 4);
  CHECK_THROWS_AS(estimate_f2(zeros), degenerate_input_error);
}

TEST_CASE("variance estimators reproduce closed forms under exact substitution") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const double lambda = 0.5 + 2.5 * rng.uniform();
    const double c = 0.1 + 0.8 * rng.uniform();
    const TrueMoments m = random_moments(rng);
    const UStats u = exact_expectations(lambda, m);
    const VarianceSet vs = theoretical_variances(lambda, m, c);

    const auto plugin = plugin_variance_from(u, c);
    CHECK(plugin.valid);
    CHECK(std::abs(plugin.value - vs.v) <= 1e-12 * (1.0 + std::abs(vs.v)));

    const auto delta = delta_variance_from(u, c);
    CHECK(delta.valid);
    const double closed = (m.f4 + m.f2 * (4.0 * m.f2 * m.f2 - m.f2 - 4.0 * m.f3)) / c;
    CHECK(std::abs(delta.value - closed) <= 1e-12 * (1.0 + std::abs(closed)));
    CHECK(std::abs(delta.value - vs.v_delta) <= 1e-12 * (1.0 + std::abs(vs.v_delta)));
  }
}

TEST_CASE("plug-in variance on the integer constant matrix is negative and flagged") {
  BipartiteNetwork ones(6, 6, std::vector<double>(36, 1.0));
  const auto v = estimate_variance_plugin(ones, 0.5);
  CHECK(v.value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(!v.valid);
  CHECK_THROWS_AS(confidence_interval(ones, 0.05, CiVariant::V), invalid_variance_error);
}

TEST_CASE("confidence intervals") {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(3.0);
  p.alpha_g = alpha_for_moment(2.0);
  const auto y = sample_network(p, 66, 66, 4);
  const TrueParams truth{1.0, moments_of(p), 0.5};

  const double theta = estimate_f2(y);
  for (CiVariant v : {CiVariant::V, CiVariant::VT, CiVariant::VD, CiVariant::VDT}) {
    const auto ci = confidence_interval(y, 0.05, v, truth);
    CHECK(ci.lo <= theta);
    CHECK(theta <= ci.hi);
    const auto wider = confidence_interval(y, 0.01, v, truth);
    CHECK(wider.lo <= ci.lo);
    CHECK(ci.hi <= wider.hi);
  }

  CHECK_THROWS_AS(confidence_interval(y, 0.05, CiVariant::VT), domain_error);
  CHECK_THROWS_AS(confidence_interval(y, 0.05, CiVariant::VDT), domain_error);
}

TEST_CASE("ci variant parsing") {
  CHECK(parse_ci_variant("v") == CiVariant::V);
  CHECK(parse_ci_variant("vt") == CiVariant::VT);
  CHECK(parse_ci_variant("vd") == CiVariant::VD);
  CHECK(parse_ci_variant("vdt") == CiVariant::VDT);
  CHECK(!parse_ci_variant("vx").has_value());
  CHECK(std::string(ci_variant_name(CiVariant::VDT)) == "vdt");
}

TEST_CASE("full report") {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(3.0);
  p.alpha_g = alpha_for_moment(2.0);
  const auto y = sample_network(p, 34, 34, 12);
  const TrueParams truth{1.0, moments_of(p), 0.5};
  const auto rep = full_report(y, 0.05, truth);
  CHECK(rep.theta_hat == doctest::Approx(rep.u_stats.h1 / rep.u_stats.h2));
  CHECK(rep.n_index == 64);
  CHECK(rep.c_hat == doctest::Approx(0.5));
  for (const auto& ci : rep.ci) {
    REQUIRE(ci.has_value());
    CHECK(ci->lo <= rep.theta_hat);
    CHECK(rep.theta_hat <= ci->hi);
  }

  // Without truth the vt/vdt slots stay empty instead of throwing.
  const auto partial = full_report(y, 0.05);
  CHECK(partial.ci[0].has_value());
  CHECK(!partial.ci[1].has_value());
  CHECK(partial.ci[2].has_value());
  CHECK(!partial.ci[3].has_value());
}

TEST_CASE("generic variance of a constant matrix is zero") {
  BipartiteNetwork y(6, 6, std::vector<double>(36, 1.5));
  CHECK(generic_asymptotic_variance(y, named_kernel(KernelId::H1), 0.5, 1 << 22) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("generic variance approaches the h1 closed form") {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(2.0);
  p.alpha_g = alpha_for_moment(1.5);
  const auto mom = moments_of(p);
  const double v_closed = theoretical_variances(1.0, mom, 0.5).v_h1;

  const int reps = 40;
  double acc = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto y = sample_network(p, 40, 40, 500 + r);
    acc += generic_asymptotic_variance(y, named_kernel(KernelId::H1), 0.5, 200000, r);
  }
  CHECK(acc / reps == doctest::Approx(v_closed).epsilon(0.15));
}

TEST_CASE("variance estimators concentrate near truth at moderate N") {
  WbeddParams p;
  p.alpha_f = alpha_for_moment(3.0);
  p.alpha_g = alpha_for_moment(2.0);
  const auto vs = theoretical_variances(1.0, moments_of(p), 0.5);
  const int reps = 40;
  double mean_v = 0.0, mean_vd = 0.0, mean_theta = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto y = sample_network(p, 1026, 1026, 9000 + r);
    mean_v += estimate_variance_plugin(y, 0.5).value;
    mean_vd += estimate_variance_delta(y, 0.5).value;
    mean_theta += estimate_f2(y);
  }
  CHECK(mean_v / reps == doctest::Approx(vs.v).epsilon(0.10));
  CHECK(mean_vd / reps == doctest::Approx(vs.v_delta).epsilon(0.10));
  CHECK(mean_theta / reps == doctest::Approx(3.0).epsilon(0.05));
}
