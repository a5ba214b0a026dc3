#include <cmath>
#include <random>

#include "doctest.h"
#include "hc/exact/integrals.hpp"
#include "hc/hydrogen/fock_map.hpp"
#include "hc/hydrogen/states.hpp"
#include "hc/tensor/harmonic.hpp"

using namespace hc;

namespace {

RadialForm X(int axis, int dim = 3) { return RadialForm::coordinate(dim, axis); }
RadialForm C(const Rational& v, int dim = 3) { return RadialForm::constant(dim, ExactScalar(v)); }
RadialForm E(const Rational& rate = 1) { return RadialForm::exponential(3, rate); }

}  // namespace

TEST_SUITE("hydrogen") {
  TEST_CASE("coordinate states") {
    CHECK(psi_coordinate(1, 0).tensor.value() == E());
    CHECK(psi_coordinate(2, 0).tensor.value() == (C(1) - RadialForm::radius(3)) * E());
    const CoulombState q = psi_coordinate(3, 2);
    for (const auto& idx : sorted_indices(3, 2)) {
      const RadialForm ref = (C(3) * X(idx[0]) * X(idx[1]) - RadialForm::radius_power(3, 2) * C(idx[0] == idx[1])) * E();
      CHECK(q.tensor.at(idx) == ref);
    }
    CHECK_THROWS_AS(psi_coordinate(2, 2), std::invalid_argument);
    CHECK(psi_coordinate(2, 0, Convention::physical).tensor.value() ==
          (C(1) - RadialForm::radius(3).scaled(ExactScalar(Rational(1, 2)))) * E(Rational(1, 2)));
  }

  TEST_CASE("schrodinger residuals") {
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        CHECK(verify_schrodinger(psi_coordinate(n, l)).is_zero());
        CHECK(verify_schrodinger(psi_coordinate(n, l, Convention::physical)).is_zero());
        for (int m = 0; m <= l; ++m) CHECK(schrodinger_residual(psi_projected(n, l, m), n, Convention::unit).is_zero());
      }
    }
    const RadialForm e = E();
    CHECK(laplacian(e).scaled(ExactScalar(Rational(-1, 2))) - RadialForm::radius_power(3, -1) * e ==
          e.scaled(ExactScalar(Rational(-1, 2))));
    CoulombState wrong = psi_coordinate(2, 0);
    wrong.n = 3;
    CHECK_FALSE(verify_schrodinger(wrong).is_zero());
  }

  TEST_CASE("squared equations") {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const SquaredResiduals r = squared_equation_check(psi_coordinate(n, l));
        CHECK(r.iterated.is_zero());
        CHECK(r.expanded.is_zero());
      }
    }
  }

  TEST_CASE("energies") {
    CHECK(energy(1, Convention::physical) == Rational(-1, 2));
    CHECK(energy(2, Convention::physical) == Rational(-1, 8));
    CHECK(energy(3, Convention::physical) == Rational(-1, 18));
    CHECK(energy(3, Convention::unit) == Rational(-1, 2));
  }

  TEST_CASE("momentum states") {
    CHECK(proportionality(momentum_state(1, 0).a.value(), RadialForm::cauchy(3, 2)).has_value());
    const RadialForm a20 = momentum_state(2, 0).a.value();
    CHECK(proportionality(a20, RadialForm::cauchy(3, 2) - RadialForm::cauchy(3, 3).scaled(ExactScalar(2))).has_value());
    CHECK(momentum_state(2, 0).argument_scale == 2);
    for (int n = 1; n <= 4; ++n) {
      const MomentumState m = momentum_state(n, n - 1);
      CHECK(m.a == harmonic_tensor(n - 1, 3).times(RadialForm::cauchy(3, n + 1)));
    }
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l < n; ++l) {
        const MomentumResiduals r = verify_momentum_ode(n, l);
        CHECK(r.vector_form.is_zero());
        CHECK(r.printed.is_zero());
      }
    }
    CHECK_FALSE(momentum_residual_printed(momentum_state(2, 0).b.value(), 3).is_zero());
  }

  TEST_CASE("alternative momentum form") {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const MomentumState m = momentum_state(n, l);
        const RadialForm a = m.a.components().begin()->second;
        const RadialForm y = harmonic_tensor(l, 3).components().begin()->second;
        std::optional<double> ratio;
        for (double p : {0.3, 0.7, 1.3, 2.9}) {
          Point pt{{p, 0.0, 0.0}};
          const double main = evaluate(a, pt).value.real() / evaluate(y, pt).value.real();
          const double alt = momentum_alternative_radial(n, l, p);
          if (!ratio) ratio = main / alt;
          CHECK(main / alt == doctest::Approx(*ratio).epsilon(1e-12));
        }
      }
    }
    CHECK(momentum_alternative_radial(2, 0, 2.0) == doctest::Approx(3.0 / 125.0));
  }

  TEST_CASE("fock map") {
    const FockPoint q = fock_map(Vec3Q{1, 0, 0});
    CHECK(q.xi[0] == 1);
    CHECK(q.xi0 == 0);
    CHECK(fock_map(Vec3Q{0, 0, 0}).xi0 == -1);
    const FockPointD far = fock_map(std::array<double, 3>{1e8, 0, 0});
    CHECK(far.xi0 == doctest::Approx(1.0));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int t = 0; t < 50; ++t) {
      const Vec3Q p{Rational(u(rng)) / 7, Rational(u(rng)) / 3, Rational(u(rng)) / 5};
      const FockPoint f = fock_map(p);
      CHECK(f.xi[0] * f.xi[0] + f.xi[1] * f.xi[1] + f.xi[2] * f.xi[2] + f.xi0 * f.xi0 == 1);
      CHECK(fock_unmap(f) == p);
    }
    CHECK_THROWS_AS(fock_unmap(FockPoint{{0, 0, 0}, 1}), std::domain_error);
    CHECK(conformal_factor({1, 1, 0}) == Rational(3, 2));
    CHECK(volume_factor({1, 0, 0}) == 1);
  }

  TEST_CASE("kernel identity") {
    const auto [l1, r1] = fock_kernel_identity({1, 0, 0}, {-1, 0, 0});
    CHECK(l1 == Rational(1, 4));
    CHECK(r1 == Rational(1, 4));
    const auto [l2, r2] = fock_kernel_identity({2, 0, 0}, {0, 1, 0});
    CHECK(l2 == r2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> u(-12, 12);
    std::uniform_int_distribution<int> d(1, 9);
    const auto draw = [&] { return Vec3Q{Rational(u(rng)) / d(rng), Rational(u(rng)) / d(rng), Rational(u(rng)) / d(rng)}; };
    int checked = 0;
    while (checked < 100) {
      const Vec3Q p = draw();
      const Vec3Q q = draw();
      if (p == q) continue;
      const auto [lhs, rhs] = fock_kernel_identity(p, q);
      CHECK(lhs == rhs);
      ++checked;
    }
    CHECK_THROWS_AS(fock_kernel_identity({1, 2, 3}, {1, 2, 3}), std::domain_error);
  }

  TEST_CASE("4d solid harmonics") {
    CHECK(solid_harmonic_4d(1, 0).value() == C(1, 4));
    const SymTensor h21 = solid_harmonic_4d(2, 1);
    for (int i = 0; i < 3; ++i) CHECK(h21.at({i}) == X(i, 4));
    CHECK(solid_harmonic_4d(2, 0).value() == C(2, 4) * X(3, 4));
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const SymTensor h = solid_harmonic_4d(n, l);
        for (const auto& [idx, f] : h.components()) {
          CHECK(laplacian(f).is_zero());
          CHECK(euler_degree(f) == f.scaled(ExactScalar(n - 1)));
        }
      }
    }
  }

  TEST_CASE("coordinate states from 4d harmonics") {
    CHECK(coulomb_from_harmonic(1, 0).constant == ExactScalar(1));
    CHECK(coulomb_from_harmonic(2, 0).value.value() == (C(1) - RadialForm::radius(3)).scaled(ExactScalar(2) * ExactScalar::i()) * E());
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        const HarmonicTransition t = coulomb_from_harmonic(n, l);
        REQUIRE(t.constant);
        CHECK_FALSE(t.constant->is_zero());
      }
    }
    for (int n = 3; n <= 6; ++n) {
      const Rational a(n - 2);
      const Poly1 ex({ExactScalar(1), ExactScalar(-2 / a), ExactScalar(2 / (a * (2 * n - 3)))}, 'r');
      const RadialForm ref = ex.in_radius(3) * E();
      const RadialForm got = coulomb_from_harmonic(n, n - 3).value.components().begin()->second;
      const RadialForm y = harmonic_tensor(n - 3, 3).components().begin()->second;
      CHECK(proportionality(got, y * ref).has_value());
    }
  }

  TEST_CASE("sphere integral cross-check") {
    // <e^{-r}, e^{-r}> = pi
    CHECK(inner_product_over_pi(E(), E()) == ExactScalar(1));
  }
}
