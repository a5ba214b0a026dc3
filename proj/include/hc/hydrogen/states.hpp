#pragma once

#include <optional>
#include <string>

#include "hc/special/correspondence.hpp"
#include "hc/tensor/sym_tensor.hpp"

namespace hc {

/// unit: every orbit rescaled to radius one, (-Laplacian + 1) Psi = (2n/r) Psi.
/// physical: (-Laplacian/2 - 1/r) Psi = E Psi with E = -1/(2n^2).
enum class Convention { unit, physical };

std::string to_string(Convention c);
Convention parse_convention(const std::string& text);

/// Throws std::invalid_argument unless n >= 1 and 0 <= l < n.
void check_quantum_numbers(int n, int l);

struct CoulombState {
  int n;
  int l;
  Convention convention;
  /// rank-l tensor of coordinate-space components
  SymTensor tensor;
};

/// Angular factor times F(-k, 2l+2, 2r) e^{-r}, or F(-k, 2l+2, 2r/n) e^{-r/n} for the
/// physical convention. `angular` must be a rank-l harmonic tensor in 3D.
CoulombState psi_coordinate(int n, int l, const SymTensor& angular, Convention c = Convention::unit);
CoulombState psi_coordinate(int n, int l, Convention c = Convention::unit);
/// Scalar state with the solid projection Y_lm as angular factor.
RadialForm psi_projected(int n, int l, int m, Convention c = Convention::unit);

/// Radial factor F(...) e^{-...} alone.
RadialForm radial_factor(int n, int l, Convention c);

/// (-Laplacian + 1 - 2n/r) f (unit) or (-Laplacian/2 - 1/r + 1/(2n^2)) f (physical).
RadialForm schrodinger_residual(const RadialForm& f, int n, Convention c);
SymTensor verify_schrodinger(const CoulombState& s);

struct SquaredResiduals {
  /// r(-Laplacian+1) r(-Laplacian+1) Psi - 4 n^2 Psi
  SymTensor iterated;
  /// [r^2 (Laplacian-1)^2 + 2(l+1)(Laplacian-1)] Psi - 4 n^2 Psi
  SymTensor expanded;
};

SquaredResiduals squared_equation_check(const CoulombState& s);

/// -1/(2n^2) (physical) or -1/2 (unit orbit).
Rational energy(int n, Convention c);

struct MomentumState {
  int n;
  int l;
  /// p carries the unit-orbit scaling; the physical spectrum has argument n p
  Rational argument_scale;
  SymTensor b;
  SymTensor a;
};

/// b = Y_l (1+p^2)^{-l} 2F(-k, 2l+k+2, l+3/2, 1/(1+p^2)), a = b / (1+p^2)^2.
MomentumState momentum_state(int n, int l, const SymTensor& angular);
MomentumState momentum_state(int n, int l);

/// [-((p^2+1) grad)^2 + 4(p^2+1) l_p] f - 4(n^2-1) f with ((p^2+1) grad)^2 applied literally.
RadialForm momentum_residual_vector_form(const RadialForm& b, int n);
/// [-((p^2+1)/2)^2 Laplacian + ((p^2+1)/2) l_p] f - (n^2-1) f
RadialForm momentum_residual_printed(const RadialForm& b, int n);

struct MomentumResiduals {
  SymTensor vector_form;
  SymTensor printed;
};

MomentumResiduals verify_momentum_ode(int n, int l);

/// Y_l (1+p^2)^{-(n+1)} p^{2k} 2F(-k, 1/2-n, l+3/2, -1/p^2) divided by Y_l, at |p|.
double momentum_alternative_radial(int n, int l, double p);

/// Y_l(x) rho^k C_k^{l+1}(x_4/rho) in 4D.
RadialForm solid_harmonic_4d(int n, int l, const RadialForm& angular3);
SymTensor solid_harmonic_4d(int n, int l);

struct HarmonicTransition {
  int n;
  int l;
  /// Y_l d^{n-1}/dt^{n-1} [e^{-t} R^k C_k^{l+1}(it/R)] at t = r
  SymTensor value;
  /// value = constant * psi_coordinate(n, l)
  std::optional<ExactScalar> constant;
};

HarmonicTransition coulomb_from_harmonic(int n, int l, const SymTensor& angular);
HarmonicTransition coulomb_from_harmonic(int n, int l);

}  // namespace hc
