#pragma once

#include <optional>
#include <string>

#include "hc/exact/radial_form.hpp"

namespace hc {

/// Ansatz solution Psi_1 = -(c1 + c2 r) z Psi_0 per unit field, with Psi_0 = e^{-r/n} (x + i y)^(n-1).
struct FirstCorrection {
  int n;
  Rational c1;
  Rational c2;
  RadialForm psi0;
  RadialForm psi1;
  /// residual of (Delta/2 + E_0 + 1/r) Psi_1 - z Psi_0 after substitution
  RadialForm residual;
};

/// Throws std::domain_error when the ansatz class has no solution.
FirstCorrection first_correction(int n);

/// (Psi_0, z Psi_0), zero by parity.
ExactScalar first_order_energy(int n);

/// E_2 / field^2 = (Psi_0, z Psi_1) / (Psi_0, Psi_0). Throws std::domain_error if E_1 != 0.
Rational second_order_energy(int n);

/// d_z / field = -2 E_2 / field^2, computed from the symbolic pipeline.
Rational dipole_moment(int n);

/// n^4 (n+1)(4n+5)/4
Rational dipole_formula(int n);

/// (n^4/8)(17 n^2 - 9 m^2 + 19). Requires |m| <= n-1.
Rational stark_reference(int n, int m);

struct StarkResult {
  int n;
  Rational c1, c2;
  Rational e2_coefficient;
  Rational dipole_coefficient;
  Rational formula;
  Rational reference;
  bool e1_zero;
  bool residual_zero;
  bool agrees;
};

StarkResult stark_result(int n);

struct TwoStateReport {
  int n;
  /// (-Delta + 1 - 2n/r) acting on each state minus (4/r) resp. (2/r) times it
  RadialForm upper_residual;
  RadialForm lower_residual;
  /// combination (n^2(n+1)/2)(|n+2,n> - 2|n+1,n>), radii rescaled by 1/n
  RadialForm combination;
  /// combination / Psi_1
  std::optional<ExactScalar> constant;
  bool holds;
};

TwoStateReport two_state_identity_check(int n);

}  // namespace hc
