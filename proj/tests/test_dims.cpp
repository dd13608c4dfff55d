#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bixu/dims.hpp"

using namespace bixu;

namespace {
const double kIrr = 1.0 / std::sqrt(2.0);
}

TEST_CASE("dims_sequence basics") {
  CHECK(dims_sequence(kIrr, 0) == std::pair<std::int64_t, std::int64_t>{2, 2});
  CHECK(dims_sequence(kIrr, 1) == std::pair<std::int64_t, std::int64_t>{3, 2});
  CHECK_THROWS_AS(dims_sequence(0.0, 4), domain_error);
  CHECK_THROWS_AS(dims_sequence(1.0, 4), domain_error);
  CHECK_THROWS_AS(dims_sequence(-0.3, 4), domain_error);
}

TEST_CASE("dims_sequence sums to N+4 at a near-half c") {
  const auto [m, n] = dims_sequence(0.5 + 1e-9, 2044);
  CHECK(m + n == 2048);
}

TEST_CASE("step_kind partitions the increments") {
  CHECK(step_kind(kIrr, 1) == StepKind::RowAdded);
  CHECK_THROWS_AS(step_kind(kIrr, 0), domain_error);
  for (std::int64_t big_n = 1; big_n <= 2000; ++big_n) {
    const auto prev = dims_sequence(kIrr, big_n - 1);
    const auto cur = dims_sequence(kIrr, big_n);
    const StepKind kind = step_kind(kIrr, big_n);
    if (kind == StepKind::RowAdded) {
      CHECK(cur.first == prev.first + 1);
      CHECK(cur.second == prev.second);
    } else {
      CHECK(cur.first == prev.first);
      CHECK(cur.second == prev.second + 1);
    }
  }
}

TEST_CASE("kappa inverts row-added steps") {
  CHECK(kappa(kIrr, 3) == 1);
  CHECK(kappa(kIrr, 4) == 2);
  CHECK_THROWS_AS(kappa(kIrr, 2), domain_error);
  int checked = 0;
  for (std::int64_t big_n = 1; big_n <= 100000; ++big_n) {
    if (step_kind(kIrr, big_n) == StepKind::RowAdded) {
      CHECK(kappa(kIrr, dims_sequence(kIrr, big_n).first) == big_n);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("row fraction converges to c") {
  for (std::int64_t big_n : {10, 100, 1000, 10000, 100000}) {
    const auto [m, n] = dims_sequence(kIrr, big_n);
    CHECK(std::abs(static_cast<double>(m) / (m + n) - kIrr) <= 2.0 / (big_n + 4));
  }
}
