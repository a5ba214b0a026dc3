#include "hc/exact/integrals.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hc {

Rational radial_integral(long k, const Rational& beta) {
  if (k < 0) throw std::invalid_argument("radial integral needs k >= 0");
  if (sgn(beta) <= 0) throw std::invalid_argument("radial integral needs beta > 0");
  return Rational(factorial(k)) / rational_pow(beta, k + 1);
}

Rational sphere_average_monomial(std::span<const int> exponents, int dim) {
  if (dim != 3 && dim != 4) throw std::invalid_argument("sphere averages are tabulated for dim 3 and 4");
  if (static_cast<int>(exponents.size()) != dim) throw std::invalid_argument("exponent count must equal dim");
  Integer num = 1;
  long total = 0;
  for (int a : exponents) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2 != 0) return 0;
    num *= double_factorial(a - 1);
    total += a;
  }
  Integer den = 1;
  for (long j = dim; j <= dim + total - 2; j += 2) den *= j;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

ExactScalar space_integral_over_pi(const RadialForm& f) {
  if (f.is_zero()) return ExactScalar(0);
  if (f.dim() != 3) throw std::invalid_argument("space integral is implemented for dim 3");
  if (f.cauchy_power() != 0) throw std::invalid_argument("space integral needs cauchy_power 0");
  if (sgn(f.exp_rate()) <= 0) throw std::invalid_argument("space integral needs a decaying exponential");
  // int x^a r^(p-m) e^{-beta r} d^3x = 4 pi <x^a>_{S^2} int r^(|a| + p - m + 2) e^{-beta r} dr
  ExactScalar total(0);
  for (const auto& [mono, c] : f.numerator().terms()) {
    const std::vector<int> a{mono.exps[0], mono.exps[1], mono.exps[2]};
    const Rational avg = sphere_average_monomial(a, 3);
    if (sgn(avg) == 0) continue;
    const long k = mono.degree() + mono.parity - f.r_power() + 2;
    if (k < 0) throw std::domain_error("integrand not integrable at the origin");
    total += c * ExactScalar(4 * avg * radial_integral(k, f.exp_rate()));
  }
  return total;
}

ExactScalar inner_product_over_pi(const RadialForm& f, const RadialForm& g) {
  return space_integral_over_pi(f.conj() * g);
}

}  // namespace hc
