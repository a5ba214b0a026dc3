#include "hc/errata.hpp"

#include "hc/hydrogen/states.hpp"
#include "hc/ladder/ladder.hpp"
#include "hc/special/correspondence.hpp"
#include "hc/special/families.hpp"
#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

RadialForm X(int dim, int i) { return RadialForm::coordinate(dim, i); }
RadialForm C(int dim, const Rational& v) { return RadialForm::constant(dim, ExactScalar(v)); }

bool harmonic_and_traceless(const SymTensor& t) {
  for (const auto& [idx, f] : t.components()) {
    if (!laplacian(f).is_zero()) return false;
  }
  return t.rank() < 2 || trace(t).is_zero();
}

// 3 (5 x_i x_k x_m - s (delta x + delta x + delta x)), with s = r^2 or s = 1
SymTensor rank3_candidate(bool with_radius) {
  SymTensor t(3, 3);
  const RadialForm s = with_radius ? RadialForm::radius_power(3, 2) : C(3, 1);
  for (const auto& idx : sorted_indices(3, 3)) {
    RadialForm f = (X(3, idx[0]) * X(3, idx[1]) * X(3, idx[2])).scaled(ExactScalar(5));
    if (idx[0] == idx[1]) f -= s * X(3, idx[2]);
    if (idx[1] == idx[2]) f -= s * X(3, idx[0]);
    if (idx[0] == idx[2]) f -= s * X(3, idx[1]);
    t.set(idx, f.scaled(ExactScalar(3)));
  }
  return t;
}

// 2 (4 x_i x_k - s delta_ik) in 4D
SymTensor rank2_4d_candidate(bool with_radius) {
  SymTensor t(4, 2);
  const RadialForm s = with_radius ? RadialForm::radius_power(4, 2) : C(4, 1);
  for (const auto& idx : sorted_indices(4, 2)) {
    RadialForm f = (X(4, idx[0]) * X(4, idx[1])).scaled(ExactScalar(4));
    if (idx[0] == idx[1]) f -= s;
    t.set(idx, f.scaled(ExactScalar(2)));
  }
  return t;
}

Erratum radius_factors() {
  const SymTensor p3 = rank3_candidate(false);
  const SymTensor v3 = rank3_candidate(true);
  const SymTensor p4 = rank2_4d_candidate(false);
  const SymTensor v4 = rank2_4d_candidate(true);
  const bool printed = harmonic_and_traceless(p3) || harmonic_and_traceless(p4);
  const bool verified = v3 == harmonic_tensor(3, 3) && v4 == harmonic_tensor(2, 4) && harmonic_and_traceless(v3) &&
                        harmonic_and_traceless(v4);
  return {"harmonic tensors without radius factors",
          "3(5xxx - (dx + dx + dx)) and 2(4xx - d)",
          "3(5xxx - r^2(dx + dx + dx)) and 2(4xx - rho^2 d)",
          printed,
          verified};
}

Erratum trace_superscript() {
  bool printed = false;
  bool verified = true;
  for (int dim : {3, 4}) {
    for (int l = 2; l <= 4; ++l) {
      for (int k = 1; k <= 2; ++k) {
        const SymTensor lhs = trace(symmetrize(k, harmonic_tensor(l, dim)));
        printed = printed || proportionality(lhs, symmetrize(k - 1, harmonic_tensor(l - 2, dim))).has_value();
        const auto c = trace_step_constant(l, k, dim);
        const int expect = dim == 3 ? 2 * l + 2 * k + 1 : 2 * l + 2 * k + 2;
        verified = verified && c && *c == expect;
      }
    }
  }
  return {"rank of the trace-reduced tensor",
          "Tr <<d^k M(l)>> = c <<d^(k-1) M(l-2)>>",
          "Tr <<d^k M(l)>> = (2l+2k+1) <<d^(k-1) M(l)>> (3D), (2l+2k+2) in 4D",
          printed,
          verified};
}

Erratum trace_double_factorial() {
  bool printed = true;
  bool verified = true;
  for (int l = 0; l <= 3; ++l) {
    for (int k = 1; k <= 2; ++k) {
      const Rational c = full_trace_constant(l, k, 3);
      printed = printed && c == Rational(double_factorial(2 * l + 2 * k + 1));
      verified = verified && c == Rational(double_factorial(2 * l + 2 * k + 1)) / Rational(double_factorial(2 * l + 1));
    }
  }
  return {"full trace constant", "(2l+2k+1)!!", "(2l+2k+1)!!/(2l+1)!!", printed, verified};
}

Erratum sphere_average_denominator() {
  bool printed = true;
  bool verified = true;
  for (int l = 2; l <= 6; l += 2) {
    const Rational c = sphere_average_tensor(l).constant;
    printed = printed && c == 1 / Rational(double_factorial(2 * l + 1));
    verified = verified && c == 1 / Rational(double_factorial(l + 1));
  }
  return {"sphere average denominator", "1/(2l+1)!!", "1/(l+1)!!", printed, verified};
}

Erratum harmonic_transition_prefactor() {
  bool printed = true;
  bool verified = true;
  const RadialForm inv_r = RadialForm::radius_power(3, -1);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const HarmonicTransition t = coulomb_from_harmonic(n, l);
      const SymTensor psi = psi_coordinate(n, l).tensor;
      printed = printed && proportionality(t.value.times(inv_r), psi).has_value();
      verified = verified && t.constant.has_value();
    }
  }
  return {"prefactor of the harmonic-to-Coulomb transition", "Psi = (1/r) d^(n-1)/dt^(n-1)[...]",
          "Psi = d^(n-1)/dt^(n-1)[...] at t = r, no 1/r", printed, verified};
}

Erratum correspondence_power() {
  bool printed = true;
  bool verified = true;
  for (int l = 0; l <= 4; ++l) {
    for (int k = 0; k + l <= 6; ++k) {
      const Correspondence lit = laguerre_from_gegenbauer(k, l, k);
      printed = printed && lit.constant.has_value();
      const Correspondence fix = laguerre_from_gegenbauer(k, l);
      verified = verified && fix.constant && *fix.constant == fix.predicted;
    }
  }
  return {"operator power in the Gegenbauer-Laguerre correspondence", "(1 - d/dt)^k", "(1 - d/dt)^(l+k)", printed,
          verified};
}

Erratum inverse_radius_constant() {
  bool printed = true;
  bool verified = true;
  for (int l = 1; l <= 4; ++l) {
    const ExactScalar c = inverse_radius_operator_constant(l);
    const Rational sign = l % 2 ? -1 : 1;
    printed = printed && c == ExactScalar(sign * Rational(double_factorial(2 * l + 1)));
    verified = verified && c == ExactScalar(sign * Rational(double_factorial(2 * l - 1)));
  }
  return {"harmonic operator on 1/r", "(-1)^l (2l+1)!! M(x)/r^(2l+1)", "(-1)^l (2l-1)!! M(x)/r^(2l+1)", printed,
          verified};
}

Erratum derivative_index() {
  bool printed = true;
  bool verified = true;
  for (int l = 0; l <= 3; ++l) {
    for (int k = 2; k <= 5; ++k) {
      const DerivativeRule r = gegenbauer_derivative_rule(k, l, 2);
      printed = printed && proportionality(r.derivative, gegenbauer_homogeneous_euclidean(k - 1, l)).has_value();
      verified = verified && r.holds;
    }
  }
  return {"index after repeated t-derivatives", "d^m/dt^m -> C_(k-1)", "d^m/dt^m -> C_(k-m)", printed, verified};
}

Erratum runge_lenz_sign() {
  bool printed = true;
  bool verified = true;
  for (const auto& r : check_ladder_identities(4, 3)) {
    if (r.degree == 0) continue;
    if (r.identity == "4d D_tau = (n+1)tau + i(x.A) [printed]") printed = printed && r.holds;
    if (r.identity == "4d D_tau = (n+1)tau - i(x.A)") verified = verified && r.holds;
  }
  return {"sign of the Runge-Lenz term in the fourth ladder component", "+ i(x.A)", "- i(x.A)", printed, verified};
}

}  // namespace

std::vector<Erratum> check_errata() {
  return {radius_factors(),        trace_superscript(),           trace_double_factorial(),
          sphere_average_denominator(), harmonic_transition_prefactor(), correspondence_power(),
          inverse_radius_constant(), derivative_index(),            runge_lenz_sign()};
}

}  // namespace hc
