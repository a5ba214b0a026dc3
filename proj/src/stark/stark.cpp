#include "hc/stark/stark.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "hc/exact/integrals.hpp"

namespace hc {

namespace {

RadialForm C3(const ExactScalar& v) { return RadialForm::constant(3, v); }

RadialForm x_plus_iy_power(int k) {
  const RadialForm w = RadialForm::coordinate(3, 0) + RadialForm::coordinate(3, 1).scaled(ExactScalar::i());
  RadialForm out = C3(ExactScalar(1));
  for (int j = 0; j < k; ++j) out *= w;
  return out;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
}

RadialForm unperturbed(int n) { return x_plus_iy_power(n - 1) * RadialForm::exponential(3, ratio(1, n)); }

RadialForm perturbation_operator(const RadialForm& f, int n) {
  const Rational e0 = ratio(-1, 2 * n * n);
  return laplacian(f).scaled(ExactScalar(ratio(1, 2))) + f.scaled(ExactScalar(e0)) +
         RadialForm::radius_power(3, -1) * f;
}

// Coefficient table of a denominator-free form.
Poly::Terms cleared_terms(const RadialForm& f, int n) {
  const RadialForm g = f * RadialForm::radius_power(3, 2);
  if (g.is_zero()) return {};
  if (g.r_power() != 0 || g.cauchy_power() != 0 || g.exp_rate() != ratio(1, n)) {
    throw std::domain_error("ansatz residual does not clear to a polynomial");
  }
  return g.numerator().terms();
}

// Solves sum_j c_j a_j = b over every coefficient; nullopt if inconsistent or underdetermined.
std::optional<std::vector<ExactScalar>> solve_matching(const std::vector<Poly::Terms>& a, const Poly::Terms& b) {
  std::map<Monomial, std::size_t> rows;
  for (const auto& t : a) {
    for (const auto& [m, c] : t) rows.try_emplace(m, rows.size());
  }
  for (const auto& [m, c] : b) rows.try_emplace(m, rows.size());
  const std::size_t cols = a.size();
  std::vector<std::vector<ExactScalar>> mat(rows.size(), std::vector<ExactScalar>(cols + 1, ExactScalar(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [m, c] : a[j]) mat[rows[m]][j] = c;
  }
  for (const auto& [m, c] : b) mat[rows[m]][cols] = c;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols; ++j, ++r) {
    std::size_t p = r;
    while (p < mat.size() && mat[p][j].is_zero()) ++p;
    if (p == mat.size()) return std::nullopt;
    std::swap(mat[p], mat[r]);
    const ExactScalar piv = mat[r][j];
    for (auto& v : mat[r]) v = v / piv;
    for (std::size_t q = 0; q < mat.size(); ++q) {
      if (q == r || mat[q][j].is_zero()) continue;
      const ExactScalar f = mat[q][j];
      for (std::size_t c = 0; c <= cols; ++c) mat[q][c] -= f * mat[r][c];
    }
  }
  for (std::size_t q = r; q < mat.size(); ++q) {
    if (!mat[q][cols].is_zero()) return std::nullopt;
  }
  std::vector<ExactScalar> x;
  for (std::size_t j = 0; j < cols; ++j) x.push_back(mat[j][cols]);
  return x;
}

Rational real_part(const ExactScalar& c, const char* what) {
  if (!c.is_real()) throw std::domain_error(std::string(what) + " is not real");
  return c.re();
}

}  // namespace

FirstCorrection first_correction(int n) {
  check_n(n);
  const RadialForm psi0 = unperturbed(n);
  const RadialForm z = RadialForm::coordinate(3, 2);
  const RadialForm b0 = -(z * psi0);
  const RadialForm b1 = -(RadialForm::radius(3) * z * psi0);
  const RadialForm rhs = z * psi0;
  const auto x = solve_matching({cleared_terms(perturbation_operator(b0, n), n), cleared_terms(perturbation_operator(b1, n), n)},
                                cleared_terms(rhs, n));
  if (!x) throw std::domain_error("no solution in the ansatz class");
  const Rational c1 = real_part((*x)[0], "c1");
  const Rational c2 = real_part((*x)[1], "c2");
  const RadialForm psi1 = b0.scaled(ExactScalar(c1)) + b1.scaled(ExactScalar(c2));
  return {n, c1, c2, psi0, psi1, perturbation_operator(psi1, n) - rhs};
}

ExactScalar first_order_energy(int n) {
  check_n(n);
  const RadialForm psi0 = unperturbed(n);
  return inner_product_over_pi(psi0, RadialForm::coordinate(3, 2) * psi0);
}

Rational second_order_energy(int n) {
  if (!first_order_energy(n).is_zero()) throw std::domain_error("first-order energy does not vanish");
  const FirstCorrection fc = first_correction(n);
  if (!fc.residual.is_zero()) throw std::domain_error("first correction residual is not zero");
  const ExactScalar num = inner_product_over_pi(fc.psi0, RadialForm::coordinate(3, 2) * fc.psi1);
  const ExactScalar den = inner_product_over_pi(fc.psi0, fc.psi0);
  return real_part(num / den, "second-order energy");
}

Rational dipole_moment(int n) { return -2 * second_order_energy(n); }

Rational dipole_formula(int n) {
  check_n(n);
  const Rational q(n);
  return q * q * q * q * (q + 1) * (4 * q + 5) / 4;
}

Rational stark_reference(int n, int m) {
  check_n(n);
  if (m < -(n - 1) || m > n - 1) throw std::invalid_argument("need |m| <= n-1");
  const Rational q(n);
  return q * q * q * q / 8 * (17 * q * q - 9 * m * m + 19);
}

StarkResult stark_result(int n) {
  const FirstCorrection fc = first_correction(n);
  const bool e1 = first_order_energy(n).is_zero();
  const Rational e2 = second_order_energy(n);
  const Rational d = -2 * e2;
  const Rational f = dipole_formula(n);
  const Rational ref = stark_reference(n, n - 1);
  return {n, fc.c1, fc.c2, e2, d, f, ref, e1, fc.residual.is_zero(), d == f && d == ref};
}

TwoStateReport two_state_identity_check(int n) {
  check_n(n);
  const RadialForm inv_r = RadialForm::radius_power(3, -1);
  const RadialForm base =
      RadialForm::coordinate(3, 2) * x_plus_iy_power(n - 1) * RadialForm::exponential(3, Rational(1));
  const RadialForm upper = base * (C3(ExactScalar(1)) - RadialForm::radius(3).scaled(ExactScalar(ratio(1, n + 1))));
  const RadialForm lower = base;
  const auto op = [&](const RadialForm& f) { return -laplacian(f) + f - (inv_r * f).scaled(ExactScalar(2 * n)); };
  TwoStateReport rep{n,
                     op(upper) - (inv_r * upper).scaled(ExactScalar(4)),
                     op(lower) - (inv_r * lower).scaled(ExactScalar(2)),
                     RadialForm(3),
                     std::nullopt,
                     false};
  const Rational w = Rational(n * n * (n + 1)) / 2;
  rep.combination = (upper - lower.scaled(ExactScalar(2))).scaled(ExactScalar(w)).rescaled(ratio(1, n));
  rep.constant = proportionality(rep.combination, first_correction(n).psi1);
  rep.holds = rep.upper_residual.is_zero() && rep.lower_residual.is_zero() && rep.constant.has_value();
  return rep;
}

}  // namespace hc
