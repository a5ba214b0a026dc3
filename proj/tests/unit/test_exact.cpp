#include <cmath>
#include <random>

#include "doctest.h"
#include "hc/exact/integrals.hpp"
#include "hc/exact/radial_form.hpp"

using namespace hc;

namespace {

RadialForm X(int axis, int dim = 3) { return RadialForm::coordinate(dim, axis); }
RadialForm C(long v, int dim = 3) { return RadialForm::constant(dim, ExactScalar(v)); }
RadialForm R(int dim = 3) { return RadialForm::radius(dim); }
RadialForm S(int dim = 3) {
  RadialForm s(dim);
  for (int i = 0; i < dim; ++i) s += X(i, dim) * X(i, dim);
  return s;
}

RadialForm random_form(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> coef(-4, 4);
  Poly p(dim);
  const int nterms = 1 + coin(rng);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int i = 0; i < dim; ++i) m.exps[i] = static_cast<std::uint8_t>(coin(rng) % 3);
    m.parity = static_cast<std::uint8_t>(coin(rng) % 2);
    p.add_term(m, ExactScalar(Rational(coef(rng)), Rational(coin(rng) == 0 ? coef(rng) : 0)));
  }
  const Rational rate = (coin(rng) == 0) ? Rational(coin(rng) + 1, 2) : Rational(0);
  return RadialForm(p, coin(rng), coin(rng) % 2, rate);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("scalar arithmetic") {
    ExactScalar a(Rational(1, 2), Rational(3));
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re() == a.norm2());
    CHECK(i_power(2) == ExactScalar(-1));
    CHECK(i_power(-1) == -ExactScalar::i());
    CHECK_THROWS_AS(a / ExactScalar(0), std::domain_error);
    CHECK(format_rational(Rational(3)) == "3/1");
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
  }

  TEST_CASE("normalize reduces the defining relation") {
    CHECK(R() * R() == S());
    CHECK(S() * RadialForm::radius_power(3, -2) == C(1));
    const RadialForm r3 = RadialForm::radius_power(3, 3);
    CHECK(r3 == S() * R());
    CHECK(r3.numerator() == (S() * R()).numerator());
    CHECK((S() * RadialForm::radius_power(3, -2)).r_power() == 0);
    CHECK(normalize(r3) == r3);
  }

  TEST_CASE("arithmetic") {
    CHECK(X(0) * X(0) == RadialForm::polynomial(Poly::coordinate(3, 0) * Poly::coordinate(3, 0)));
    const RadialForm e = RadialForm::exponential(3, Rational(1));
    CHECK((e * e).exp_rate() == 2);
    CHECK_THROWS(e + (e * e));
    CHECK_THROWS(X(0) + X(0, 4));
  }

  TEST_CASE("derivatives") {
    CHECK(derivative(X(0) * X(0), 0) == C(2) * X(0));
    const RadialForm inv_r = RadialForm::radius_power(3, -1);
    CHECK(derivative(inv_r, 0) == -(X(0) * RadialForm::radius_power(3, -3)));
    const RadialForm e = RadialForm::exponential(3, Rational(1));
    CHECK(derivative(e, 0) == -(X(0) * inv_r * e));
    CHECK_THROWS_AS(derivative(e, 3), std::out_of_range);
    CHECK(laplacian(C(3) * X(0) * X(0) - S()).is_zero());
    CHECK(laplacian(X(0) * X(0)) == C(2));
    CHECK(laplacian(e) == (C(1) - C(2) * inv_r) * e);
  }

  TEST_CASE("euler operator") {
    const RadialForm xyz = X(0) * X(1) * X(2);
    CHECK(euler_degree(xyz) == C(3) * xyz);
    const RadialForm inv_r = RadialForm::radius_power(3, -1);
    CHECK(euler_degree(inv_r) == -inv_r);
    CHECK(euler_degree(R()) == R());
    for (int h = -5; h <= 5; ++h) {
      const RadialForm f = RadialForm::radius_power(4, h) * X(1, 4) * X(3, 4);
      CHECK(homogeneity_degree(f) == h + 2);
      CHECK(euler_degree(f) == C(h + 2, 4) * f);
    }
  }

  TEST_CASE("evaluation") {
    const RadialForm q = C(3) * X(0) * X(0) - S();
    auto v = evaluate(q, ExactPoint{{1, 0, 0}});
    REQUIRE(v.exact);
    CHECK(*v.exact == ExactScalar(2));
    CHECK_THROWS_AS(evaluate(RadialForm::radius_power(3, -1), ExactPoint{{0, 0, 0}}), std::domain_error);
    auto e = evaluate(RadialForm::exponential(3, Rational(1)), ExactPoint{{3, 4, 0}});
    CHECK(e.value.real() == doctest::Approx(std::exp(-5.0)).epsilon(1e-14));
    CHECK(e.value.real() == doctest::Approx(6.7379e-3).epsilon(1e-4));
    auto r = evaluate(R(), ExactPoint{{1, 1, 0}});
    CHECK_FALSE(r.exact);
    CHECK(r.value.real() == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("radial integral and sphere averages") {
    CHECK(radial_integral(3, 1) == 6);
    CHECK(radial_integral(0, 2) == Rational(1, 2));
    CHECK(radial_integral(2, 2) == Rational(1, 4));
    const std::vector<int> x2{2, 0, 0}, x4{4, 0, 0}, x2y2{2, 2, 0}, odd{1, 1, 0};
    CHECK(sphere_average_monomial(x2) == Rational(1, 3));
    CHECK(sphere_average_monomial(x4) == Rational(1, 5));
    CHECK(sphere_average_monomial(x2y2) == Rational(1, 15));
    CHECK(sphere_average_monomial(odd) == 0);
    const std::vector<int> y2{0, 0, 0, 2};
    CHECK(sphere_average_monomial(y2, 4) == Rational(1, 4));
    // int e^{-2r} d^3x = pi/2 * 2 ... 4 pi * 2!/2^3 = pi
    CHECK(space_integral_over_pi(RadialForm::exponential(3, Rational(2))) == ExactScalar(1));
  }

  TEST_CASE("fuzz: canonicality and closure") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
      const int dim = (trial % 2) ? 3 : 4;
      const RadialForm f = random_form(rng, dim);
      const RadialForm g = random_form(rng, dim);
      CHECK(normalize(normalize(f)) == normalize(f));
      CHECK((f - f).is_zero());
      CHECK(f * g == g * f);
      const RadialForm d = derivative(f, trial % dim);
      CHECK(normalize(d).numerator() == d.numerator());
      CHECK(derivative(derivative(f, 0), 1) == derivative(derivative(f, 1), 0));
      CHECK(derivative(f * g, 0) == derivative(f, 0) * g + f * derivative(g, 0));
      const RadialForm lap = laplacian(f);
      CHECK(normalize(lap).numerator() == lap.numerator());
    }
  }

  TEST_CASE("finite differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.3, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
      const int dim = 3;
      const RadialForm f = random_form(rng, dim);
      Point p{{u(rng), u(rng), u(rng)}};
      for (int axis = 0; axis < dim; ++axis) {
        const double h = 1e-5;
        Point a = p, b = p;
        a.coords[axis] += h;
        b.coords[axis] -= h;
        const auto fd = (evaluate(f, a).value - evaluate(f, b).value) / (2 * h);
        const auto an = evaluate(derivative(f, axis), p).value;
        CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
      }
    }
  }
}
