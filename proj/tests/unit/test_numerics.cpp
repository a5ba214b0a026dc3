#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hc/numerics/fock.hpp"
#include "hc/numerics/resolvent.hpp"

using namespace hc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("numerics") {
  TEST_CASE("s3 rule") {
    for (int level : {1, 4, 9}) {
      const QuadratureRule q = s3_quadrature(level);
      double w = 0;
      for (double x : q.weights) w += x;
      CHECK(w == doctest::Approx(2 * kPi * kPi).epsilon(1e-12));
      for (std::size_t i = 0; i < q.size(); ++i) {
        const auto p = q.node(i);
        CHECK(std::abs(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]) - 1) < 1e-14);
      }
      CHECK(exactness_error(q, 2 * level - 1) < 1e-12);
    }
    const QuadratureRule q = s3_quadrature(2);
    std::vector<double> x0(q.size()), x01(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      x0[i] = q.weights[i] * q.coords[3][i] * q.coords[3][i];
      x01[i] = q.weights[i] * q.coords[3][i] * q.coords[0][i];
    }
    CHECK(pairwise_sum(x0) == doctest::Approx(kPi * kPi / 2));
    CHECK(std::abs(pairwise_sum(x01)) < 1e-14);
    CHECK(exactness_error(s3_quadrature(3), 6) > 1e-6);
    CHECK_THROWS_AS(s3_quadrature(0), std::invalid_argument);
  }

  TEST_CASE("s2 rule") {
    for (int level : {1, 5, 12}) CHECK(exactness_error(s2_quadrature(level), 2 * level - 1) < 1e-12);
  }

  TEST_CASE("newton 3d") {
    const NumericCheck c0 = newton_check_3d(0, {0, 0, 0});
    CHECK(c0.lhs == doctest::Approx(4 * kPi));
    const NumericCheck c1 = newton_check_3d(1, {0, 0, 0.5});
    CHECK(c1.rhs == doctest::Approx(2 * kPi / 3));
    CHECK(c1.pass);
    for (int l = 0; l <= 4; ++l) {
      const NumericCheck c = newton_check_3d(l, {0.21, -0.33, 0.4});
      CHECK(c.rel_error < 1e-8);
    }
    CHECK_THROWS_AS(newton_check_3d(1, {0, 0, 1}), std::domain_error);
  }

  TEST_CASE("fock 4d") {
    const NumericCheck c1 = fock_check_4d(1, 0, {0, 0, 0, 0});
    CHECK(c1.lhs == doctest::Approx(2 * kPi * kPi));
    CHECK(fock_check_4d(2, 1, {0.3, 0, 0, 0.2}).rel_error < 1e-8);
    CHECK(fock_check_4d(4, 1, {0.1, -0.2, 0.25, 0.3}).rel_error < 1e-6);
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) CHECK(fock_check_4d(n, l, {0.2, 0.1, -0.3, 0.15}).rel_error < 1e-8);
    }
    CHECK_THROWS_AS(fock_check_4d(2, 0, {1, 0, 0, 0}), std::domain_error);
  }

  TEST_CASE("fock error shrinks with level") {
    double prev = 1;
    for (int level : {2, 4, 8, 16}) {
      const double e = fock_check_4d(3, 1, {0.3, 0.2, 0.1, 0.2}, level).rel_error;
      CHECK(e <= prev * 1.5 + 1e-14);
      prev = e;
    }
    CHECK(prev < 1e-8);
  }

  TEST_CASE("gegenbauer kernel") {
    const std::array<double, 4> x{0, 0, 0, 1};
    for (int k = 0; k <= 4; ++k) {
      for (const auto& c : gegenbauer_kernel_checks(k, x, {0.2, 0.1, 0.3, -0.25})) {
        CAPTURE(c.identity);
        CHECK(c.pass);
      }
    }
    const auto r0 = gegenbauer_kernel_checks(0, x, {0.3, 0, 0, 0.2});
    CHECK(r0[0].lhs == doctest::Approx(fock_check_4d(1, 0, {0.3, 0, 0, 0.2}).lhs).epsilon(1e-12));
    const auto half = gegenbauer_kernel_checks(1, x, {0.5, 0, 0, 0});
    CHECK(half.back().rhs == doctest::Approx(0.8));
    CHECK(half.back().lhs == doctest::Approx(0.8));
  }

  TEST_CASE("momentum amplitude on the sphere") {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        for (const auto& c : momentum_sphere_checks(n, l, 10, 42)) CHECK(c.rel_error < 1e-6);
      }
    }
  }

  TEST_CASE("resolvent") {
    const ResolventResult z = resolvent({0.3, 0.0, 50});
    CHECK(z.smooth_sum == 0);
    CHECK(z.assembled_value == 0);
    CHECK(z.singular_part == "delta(x-y)");
    const ResolventResult r = resolvent({0.3, 0.5, 400});
    CHECK(std::abs(r.smooth_sum - r.series_route) < 1e-6);
    CHECK(r.tail_bound < 1e-6);
    const ResolventResult big = resolvent({0.3, 0.5, 4000});
    CHECK(std::abs(big.smooth_sum - r.smooth_sum) <= r.tail_bound);
    CHECK_THROWS_AS(resolvent({0.3, 2.0, 40}), std::domain_error);
    CHECK_THROWS_AS(resolvent({1.2, 0.5, 40}), std::domain_error);
    CHECK_THROWS_AS(resolvent({0.3, 0.5, 0}), std::invalid_argument);
    for (int p : {1, 2}) CHECK(pole_scan(p, 0.3, 400).exceeds);
    CHECK_FALSE(pole_scan(1, 0.3, 400, 1e12).exceeds);
    for (int k : {0, 1}) CHECK(residue_check(k, 0.3, 400).rel_error < 1e-5);
  }

  TEST_CASE("seed from env") {
    unsetenv("HC_SEED");
    CHECK(seed_from_env(7) == 7);
    setenv("HC_SEED", "123", 1);
    CHECK(seed_from_env(7) == 123);
    setenv("HC_SEED", "x", 1);
    CHECK_THROWS_AS(seed_from_env(7), std::invalid_argument);
    unsetenv("HC_SEED");
  }
}
