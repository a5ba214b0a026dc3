#pragma once

#include <span>

#include "hc/exact/radial_form.hpp"

namespace hc {

/// int_0^inf r^k e^{-beta r} dr = k! / beta^(k+1)
Rational radial_integral(long k, const Rational& beta);

/// Average of x_1^a1 ... x_d^ad over the unit sphere S^(d-1) (d = 3 or 4).
/// Zero when any exponent is odd; otherwise prod (a_i - 1)!! divided by
/// d (d+2) ... (d + |a| - 2).
Rational sphere_average_monomial(std::span<const int> exponents, int dim = 3);

/// int over R^3 of f d^3x, returned as the coefficient of pi.
/// Requires dim 3, cauchy_power 0, positive exponential rate and an integrable origin.
ExactScalar space_integral_over_pi(const RadialForm& f);

/// <f, g> = int conj(f) g d^3x, as the coefficient of pi.
ExactScalar inner_product_over_pi(const RadialForm& f, const RadialForm& g);

}  // namespace hc
