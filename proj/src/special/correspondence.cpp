#include "hc/special/correspondence.hpp"

#include <stdexcept>

#include "hc/exact/integrals.hpp"

namespace hc {

namespace {

BivariatePoly homogeneous(int k, int l, bool imaginary) {
  if (k < 0 || l < 0) throw std::invalid_argument("k and l must be non-negative");
  const Poly1 c = gegenbauer(k, Rational(l + 1));
  BivariatePoly out;
  for (int j = 0; j <= c.degree(); ++j) {
    const ExactScalar cj = c.coeff(j);
    if (cj.is_zero()) continue;
    const int q = (k - j) / 2;
    const ExactScalar base = imaginary ? cj * i_power(j) : cj;
    // (r^2 -+ t^2)^q
    for (int s = 0; s <= q; ++s) {
      ExactScalar w = base * ExactScalar(Rational(binomial(q, s)));
      if (imaginary && (q - s) % 2 == 1) w = -w;
      out.add_term(j + 2 * (q - s), 2 * s, w);
    }
  }
  return out;
}

Rational gegenbauer_moment(int j, int l) {
  Rational v(Integer(2) * double_factorial(2 * j - 1) * double_factorial(2 * l + 1),
             (Integer(1) << (j + l + 1)) * factorial(j + l + 1));
  v.canonicalize();
  return v;
}

}  // namespace

BivariatePoly gegenbauer_homogeneous(int k, int l) { return homogeneous(k, l, true); }

BivariatePoly gegenbauer_homogeneous_euclidean(int k, int l) { return homogeneous(k, l, false); }

BivariatePoly chebyshev_seed(int k) {
  BivariatePoly out;
  for (int j = 1; j <= k + 1; j += 2) out.add_term(k + 1 - j, j - 1, ExactScalar(Rational(binomial(k + 1, j))) * i_power(j - 1));
  return out;
}

RadialForm bivariate_to_form4(const BivariatePoly& p) {
  RadialForm out(4);
  const RadialForm s3 = RadialForm::coordinate(4, 0) * RadialForm::coordinate(4, 0) +
                        RadialForm::coordinate(4, 1) * RadialForm::coordinate(4, 1) +
                        RadialForm::coordinate(4, 2) * RadialForm::coordinate(4, 2);
  for (const auto& [key, c] : p.terms()) {
    if (key.second % 2 != 0) throw std::invalid_argument("odd power of the 3D radius");
    RadialForm term = RadialForm::constant(4, c);
    for (int a = 0; a < key.first; ++a) term *= RadialForm::coordinate(4, 3);
    for (int b = 0; b < key.second / 2; ++b) term *= s3;
    out += term;
  }
  return out;
}

BivariatePoly one_minus_dt_power(const BivariatePoly& p, int power) {
  if (power < 0) throw std::invalid_argument("negative operator power");
  BivariatePoly out = p;
  for (int j = 0; j < power; ++j) out -= out.d_dt();
  return out;
}

Correspondence laguerre_from_gegenbauer(int k, int l, int operator_power) {
  const int n_op = operator_power < 0 ? l + k : operator_power;
  const Poly1 p = one_minus_dt_power(gegenbauer_homogeneous(k, l), n_op).at_t_equals_r();
  const Poly1 f = gauss_f(k, Rational(2 * l + 2), Rational(2));
  Rational pred(factorial(l + k) * factorial(2 * l + k + 1), factorial(l) * factorial(k) * factorial(2 * l + 1));
  pred.canonicalize();
  return {k, l, n_op, p, proportionality(p, f), i_power(-k) * ExactScalar(pred)};
}

std::optional<ExactScalar> laguerre_constant(int k, int l) {
  const Poly1 lag = laguerre(k, 2 * l + 1).argument_scaled(ExactScalar(2));
  return proportionality(lag, laguerre_from_gegenbauer(k, l).polynomial);
}

DerivativeRule gegenbauer_derivative_rule(int k, int l, int m) {
  if (m < 0) throw std::invalid_argument("negative derivative order");
  BivariatePoly d = gegenbauer_homogeneous_euclidean(k, l);
  for (int j = 0; j < m; ++j) d = d.d_dt();
  if (m > k) return {ExactScalar(0), d, BivariatePoly{}, d.is_zero()};
  const BivariatePoly reduced = gegenbauer_homogeneous_euclidean(k - m, l);
  Rational c(factorial(2 * l + k + 1), factorial(2 * l + k + 1 - m));
  c.canonicalize();
  return {ExactScalar(c), d, reduced, d == reduced.scaled(ExactScalar(c))};
}

Norms norms(int n, int l) {
  if (l < 0 || n < l + 1) throw std::invalid_argument("need n >= l + 1");
  const int k = n - l - 1;
  const Poly1 lag = laguerre(k, 2 * l + 1);
  const Poly1 lag2 = lag * lag;
  Rational nl = 0;
  for (int j = 0; j <= lag2.degree(); ++j) nl += lag2.coeff(j).re() * radial_integral(j + 2 * l + 2, Rational(2));
  const Poly1 c = gegenbauer(k, Rational(l + 1));
  const Poly1 c2 = c * c;
  Rational nc = 0;
  for (int j = 0; j <= c2.degree(); j += 2) nc += c2.coeff(j).re() * gegenbauer_moment(j / 2, l);
  Rational closed(factorial(k + 2 * l + 1), (Integer(1) << (2 * l)) * factorial(k) * n * factorial(l) * factorial(l));
  closed.canonicalize();
  Rational ref(factorial(n + l) * factorial(n - 1), 2);
  ref.canonicalize();
  ref *= ref;
  const Rational ratio = nl / nc;
  return {n, l, nl, nc, closed, ratio, ref, ratio == ref};
}

}  // namespace hc
