#pragma once

#include <string>
#include <vector>

#include "hc/tensor/sym_tensor.hpp"

namespace hc {

/// (2 l - 1) applied after multiplication by x_i, minus r^2 d_i. Polynomial input only.
RadialForm raise3(const RadialForm& f, int axis);
SymTensor raise3(const SymTensor& t);

/// 2 n applied after multiplication by y_i, minus rho^2 d_i. Polynomial dim-4 input only.
RadialForm raise4(const RadialForm& f, int axis);
SymTensor raise4(const SymTensor& t);

/// l-fold application to 1.
SymTensor ladder_power(int l, int dim);

/// Angular momentum component L_k f = -i (x x grad)_k f over the first three coordinates.
RadialForm angular_momentum(const RadialForm& f, int k);

/// A_i f = i (tau d_i - x_i d_tau) f in 4D, i < 3.
RadialForm runge_lenz(const RadialForm& f, int i);

struct IdentityResult {
  std::string identity;
  int degree;
  bool holds;
  std::string counterexample;
};

/// Monomials of total degree <= max_degree in dim variables.
std::vector<RadialForm> monomial_basis(int dim, int max_degree);

/// Every operator identity of the 3D (dim 3) or 4D (dim 4) ladder, one entry per
/// identity and degree. Identities that hold only on harmonic input are checked on
/// a harmonic basis and, in corrected form, on all monomials.
std::vector<IdentityResult> check_ladder_identities(int dim, int max_degree);

}  // namespace hc
