#pragma once

#include "hc/special/families.hpp"

namespace hc {

/// R^k C_k^{l+1}(i t / R) with R^2 = r^2 - t^2, expanded in (t, r).
BivariatePoly gegenbauer_homogeneous(int k, int l);

/// R^k C_k^{l+1}(t / R) with R^2 = r^2 + t^2, expanded in (t, r).
BivariatePoly gegenbauer_homogeneous_euclidean(int k, int l);

/// (1 / 2ir) ((t + ir)^{k+1} - (t - ir)^{k+1})
BivariatePoly chebyshev_seed(int k);

/// 4D polynomial with t -> x_4 and r^2 -> x_1^2 + x_2^2 + x_3^2. Odd r powers are rejected.
RadialForm bivariate_to_form4(const BivariatePoly& p);

/// (1 - d/dt)^power applied to p.
BivariatePoly one_minus_dt_power(const BivariatePoly& p, int power);

struct Correspondence {
  int k;
  int l;
  int operator_power;
  /// (1 - d/dt)^N [R^k C_k^{l+1}(it/R)] at t = r
  Poly1 polynomial;
  /// polynomial = constant * F(-k, 2l+2, 2r), when proportional
  std::optional<ExactScalar> constant;
  /// (-i)^k (l+k)! (2l+k+1)! / (l! k! (2l+1)!)
  ExactScalar predicted;
};

/// Operator power N = l + k unless overridden.
Correspondence laguerre_from_gegenbauer(int k, int l, int operator_power = -1);

/// c with L_k^{2l+1}(2r) = c (1 - d/dt)^{l+k}[R^k C_k^{l+1}(it/R)]|_{t=r}; nullopt when not proportional.
std::optional<ExactScalar> laguerre_constant(int k, int l);

struct DerivativeRule {
  ExactScalar constant;
  BivariatePoly derivative;
  BivariatePoly reduced;
  bool holds;
};

/// d^m/dt^m of the Euclidean homogeneous form against (2l+k+1)!/(2l+k+1-m)! times
/// the same form at degree k-m. For m > k the derivative is zero and so is the constant.
DerivativeRule gegenbauer_derivative_rule(int k, int l, int m);

struct Norms {
  int n;
  int l;
  /// int_0^inf [L_k^{2l+1}(r)]^2 r^{2l+2} e^{-2r} dr
  Rational laguerre;
  /// (2/pi) int_{-1}^{1} [C_k^{l+1}(t)]^2 (1-t^2)^{l+1/2} dt, from moment sums
  Rational gegenbauer;
  /// 2^{-2l} (k+2l+1)! / (k! n (l!)^2)
  Rational gegenbauer_closed;
  Rational ratio;
  /// [(n+l)! (n-1)! / 2]^2
  Rational reference;
  bool reference_matches;
};

Norms norms(int n, int l);

}  // namespace hc
