#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hc/tensor/sym_tensor.hpp"

namespace hc {

/// M^(l) in 3D (leading coefficient (2l-1)!!) or the 4D tensor with leading
/// coefficient (2l)!!. Components are homogeneous harmonic polynomials.
SymTensor harmonic_tensor(int l, int dim);

/// Harmonic tensor divided by r^(2l+1) (3D) or r^(2l+2) (4D).
SymTensor multipole_tensor(int l, int dim);

/// (2l-1)!! in 3D and (2l)!! in 4D.
Integer decomposition_scale(int l, int dim);

struct DecompositionTerm {
  int harmonic_rank;
  int delta_count;
  /// a_k r^(2k)
  RadialForm coefficient;
  Rational rational_coefficient;
};

/// scale(l) x^{(x)l} = sum_k a_k r^(2k) << delta^k M^(l-2k) >>, with every a_k found
/// by tracing the identity down to its harmonic part.
std::vector<DecompositionTerm> decompose_power(int l, int dim);

/// sum of the decomposition terms as a tensor
SymTensor recompose(const std::vector<DecompositionTerm>& terms, int rank, int dim);

/// Tr^k << delta^k M^(l) >> / M^(l), found by explicit tracing.
Rational full_trace_constant(int l, int k, int dim);

/// c with Tr << delta^k M^(l) >> = c << delta^(k-1) M^(l) >>, or nullopt when the
/// trace is not proportional to that tensor.
std::optional<Rational> trace_step_constant(int l, int k, int dim);

struct SphereAverage {
  SymTensor average;
  /// average = constant * << delta^(l/2) >>; zero for odd l.
  Rational constant;
  bool odd_rank;
};

/// Unit-sphere average of x^{(x)l} in 3D from the monomial averages.
SphereAverage sphere_average_tensor(int l);

/// sum_e c_e u^(e/2) (1+u)^(-c), a function of the squared argument u = r^2.
class SquaredArgFunction {
 public:
  /// key: (twice the power of u, power of (1+u)^-1)
  using Terms = std::map<std::pair<int, int>, Rational>;

  SquaredArgFunction() = default;
  static SquaredArgFunction power(int twice_exponent, const Rational& c = 1);
  static SquaredArgFunction cauchy(int c, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  void add_term(int twice_exponent, int cauchy_power, const Rational& c);
  SquaredArgFunction& operator+=(const SquaredArgFunction& o);

  /// d/du
  SquaredArgFunction derivative() const;
  RadialForm to_form(int dim) const;

  /// Recognize a radial form depending on r^2 only; nullopt otherwise.
  static std::optional<SquaredArgFunction> from_form(const RadialForm& f);

 private:
  Terms terms_;
};

/// M^(l)(grad) f by literal repeated differentiation of every monomial.
SymTensor harmonic_operator_apply(int l, const RadialForm& f);

/// M^(l)(x) 2^l f^(l)(r^2); throws std::invalid_argument if f is not a function of r^2.
SymTensor harmonic_operator_closed_form(int l, const RadialForm& f);

/// c with M^(l)(grad)(1/r) = c M^(l)(x) / r^(2l+1).
ExactScalar inverse_radius_operator_constant(int l);

/// Contraction of M^(l) with (l-m) copies of n_z and m copies of n_x + sign i n_y.
RadialForm solid_projection(int l, int m, int sign = +1);

}  // namespace hc
