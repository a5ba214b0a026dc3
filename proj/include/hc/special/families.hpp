#pragma once

#include "hc/special/poly1.hpp"

namespace hc {

/// Pochhammer symbol (a)_j.
Rational pochhammer(const Rational& a, long j);

/// Terminating confluent series F(-k, beta, scale * r) as a polynomial in r.
/// Throws std::domain_error when beta is a non-positive integer > -k.
Poly1 gauss_f(int k, const Rational& beta, const Rational& scale = 1);

/// Terminating Gauss series 2F1(-k, b; c; u) as a polynomial in u.
Poly1 hyp2f1(int k, const Rational& b, const Rational& c);

/// Gegenbauer polynomial C_k^alpha(z) by the three-term recurrence.
Poly1 gegenbauer(int k, const Rational& alpha);

/// Legendre polynomial P_l(t).
Poly1 legendre(int l);

/// L_k^a(x) = sum_m (-1)^m C(k+a, k-m) x^m / m!
Poly1 laguerre(int k, int a);

/// sin((k+1) phi) / sin(phi) evaluated by the recurrence at z = cos(phi); double precision.
double chebyshev_u(int k, double z);

}  // namespace hc
