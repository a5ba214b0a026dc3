#include "hc/hydrogen/states.hpp"

#include <cmath>
#include <stdexcept>

#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

RadialForm C3(const Rational& v) { return RadialForm::constant(3, ExactScalar(v)); }

RadialForm one_plus_s(int dim) { return RadialForm::constant(dim, ExactScalar(1)) + RadialForm::radius_power(dim, 2); }

void check_angular(const SymTensor& angular, int l) {
  if (angular.dim() != 3 || angular.rank() != l) throw std::invalid_argument("angular factor must be a rank-l tensor in 3D");
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::unit ? "unit" : "physical"; }

Convention parse_convention(const std::string& text) {
  if (text == "unit") return Convention::unit;
  if (text == "physical") return Convention::physical;
  throw std::invalid_argument("unknown convention: " + text);
}

void check_quantum_numbers(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("need n >= 1 and 0 <= l < n");
}

RadialForm radial_factor(int n, int l, Convention c) {
  check_quantum_numbers(n, l);
  const int k = n - l - 1;
  const Rational rate = c == Convention::unit ? Rational(1) : ratio(1, n);
  return gauss_f(k, Rational(2 * l + 2), 2 * rate).in_radius(3) * RadialForm::exponential(3, rate);
}

CoulombState psi_coordinate(int n, int l, const SymTensor& angular, Convention c) {
  check_quantum_numbers(n, l);
  check_angular(angular, l);
  return {n, l, c, angular.times(radial_factor(n, l, c))};
}

CoulombState psi_coordinate(int n, int l, Convention c) {
  check_quantum_numbers(n, l);
  return psi_coordinate(n, l, harmonic_tensor(l, 3), c);
}

RadialForm psi_projected(int n, int l, int m, Convention c) {
  check_quantum_numbers(n, l);
  return solid_projection(l, m) * radial_factor(n, l, c);
}

RadialForm schrodinger_residual(const RadialForm& f, int n, Convention c) {
  const RadialForm inv_r = RadialForm::radius_power(f.dim(), -1);
  if (c == Convention::unit) return -laplacian(f) + f - (inv_r * f).scaled(ExactScalar(2 * n));
  return laplacian(f).scaled(ExactScalar(ratio(-1, 2))) - inv_r * f + f.scaled(ExactScalar(ratio(1, 2 * n * n)));
}

SymTensor verify_schrodinger(const CoulombState& s) {
  return s.tensor.map([&](const RadialForm& f) { return schrodinger_residual(f, s.n, s.convention); });
}

SquaredResiduals squared_equation_check(const CoulombState& s) {
  if (s.convention != Convention::unit) throw std::invalid_argument("squared equations use the unit-orbit convention");
  const RadialForm r = RadialForm::radius(3);
  const ExactScalar four_n2(4 * s.n * s.n);
  const auto a = [](const RadialForm& f) { return f - laplacian(f); };
  const auto iterated = [&](const RadialForm& psi) { return r * a(r * a(psi)) - psi.scaled(four_n2); };
  const auto expanded = [&](const RadialForm& psi) {
    const RadialForm b = laplacian(psi) - psi;
    const RadialForm bb = laplacian(b) - b;
    return r * r * bb + (euler_degree(b) + b).scaled(ExactScalar(2)) - psi.scaled(four_n2);
  };
  return {s.tensor.map(iterated), s.tensor.map(expanded)};
}

Rational energy(int n, Convention c) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return c == Convention::physical ? ratio(-1, 2 * n * n) : ratio(-1, 2);
}

MomentumState momentum_state(int n, int l, const SymTensor& angular) {
  check_quantum_numbers(n, l);
  check_angular(angular, l);
  const int k = n - l - 1;
  const Poly1 f = hyp2f1(k, Rational(2 * l + k + 2), ratio(2 * l + 3, 2));
  RadialForm radial(3);
  for (int j = 0; j <= f.degree(); ++j) radial += RadialForm::cauchy(3, l + j).scaled(f.coeff(j));
  const SymTensor b = angular.times(radial);
  return {n, l, Rational(n), b, b.times(RadialForm::cauchy(3, 2))};
}

MomentumState momentum_state(int n, int l) { return momentum_state(n, l, harmonic_tensor(l, 3)); }

RadialForm momentum_residual_vector_form(const RadialForm& b, int n) {
  const RadialForm w = one_plus_s(b.dim());
  RadialForm v(b.dim());
  for (int i = 0; i < b.dim(); ++i) v += w * derivative(w * derivative(b, i), i);
  return -v + (w * euler_degree(b)).scaled(ExactScalar(4)) - b.scaled(ExactScalar(4 * (n * n - 1)));
}

RadialForm momentum_residual_printed(const RadialForm& b, int n) {
  const RadialForm h = one_plus_s(b.dim()).scaled(ExactScalar(ratio(1, 2)));
  return -(h * h * laplacian(b)) + h * euler_degree(b) - b.scaled(ExactScalar(n * n - 1));
}

MomentumResiduals verify_momentum_ode(int n, int l) {
  const MomentumState m = momentum_state(n, l);
  return {m.b.map([&](const RadialForm& f) { return momentum_residual_vector_form(f, n); }),
          m.b.map([&](const RadialForm& f) { return momentum_residual_printed(f, n); })};
}

double momentum_alternative_radial(int n, int l, double p) {
  check_quantum_numbers(n, l);
  const int k = n - l - 1;
  const Poly1 f = hyp2f1(k, ratio(1, 2) - n, ratio(2 * l + 3, 2));
  const double p2 = p * p;
  return std::pow(1 + p2, -(n + 1)) * std::pow(p2, k) * f.eval(-1.0 / p2);
}

RadialForm solid_harmonic_4d(int n, int l, const RadialForm& angular3) {
  check_quantum_numbers(n, l);
  if (angular3.dim() != 3 || !angular3.is_polynomial()) throw std::invalid_argument("angular factor must be a 3D polynomial");
  const int k = n - l - 1;
  return angular3.embedded(4) * bivariate_to_form4(gegenbauer_homogeneous_euclidean(k, l));
}

SymTensor solid_harmonic_4d(int n, int l) {
  const SymTensor y = harmonic_tensor(l, 3);
  SymTensor out(4, l);
  for (const auto& [idx, f] : y.components()) out.set(idx, solid_harmonic_4d(n, l, f));
  return out;
}

HarmonicTransition coulomb_from_harmonic(int n, int l, const SymTensor& angular) {
  check_quantum_numbers(n, l);
  check_angular(angular, l);
  const int k = n - l - 1;
  // d/dt [e^{-t} Q] = e^{-t} (Q' - Q)
  BivariatePoly q = gegenbauer_homogeneous(k, l);
  for (int j = 0; j < n - 1; ++j) q = q.d_dt() - q;
  const RadialForm radial = q.at_t_equals_r().in_radius(3) * RadialForm::exponential(3, Rational(1));
  const SymTensor value = angular.times(radial);
  return {n, l, value, proportionality(value, psi_coordinate(n, l, angular).tensor)};
}

HarmonicTransition coulomb_from_harmonic(int n, int l) {
  check_quantum_numbers(n, l);
  return coulomb_from_harmonic(n, l, harmonic_tensor(l, 3));
}

}  // namespace hc
