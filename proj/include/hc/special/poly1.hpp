#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hc/exact/radial_form.hpp"
#include "hc/exact/scalar.hpp"

namespace hc {

/// Univariate polynomial over the Gaussian rationals, coefficients ascending.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<ExactScalar> coeffs, char var = 'z');

  static Poly1 monomial(int degree, const ExactScalar& c, char var = 'z');

  char var() const { return var_; }
  Poly1 with_var(char v) const;
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  ExactScalar coeff(int k) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1 scaled(const ExactScalar& c) const;

  Poly1 derivative() const;
  /// p(c z)
  Poly1 argument_scaled(const ExactScalar& c) const;
  /// p(-z) compared to +p or -p: returns +1, -1, or 0 for no definite parity.
  int parity() const;

  ExactScalar operator()(const ExactScalar& z) const;
  double eval(double z) const;

  /// Sum of c_k r^k as a radial form of the given dimension.
  RadialForm in_radius(int dim) const;

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }
  friend std::optional<ExactScalar> proportionality(const Poly1& a, const Poly1& b);

  std::string str() const;

 private:
  void trim();

  std::vector<ExactScalar> coeffs_;
  char var_ = 'z';
};

/// Polynomial in (t, r), keyed by (power of t, power of r).
class BivariatePoly {
 public:
  using Terms = std::map<std::pair<int, int>, ExactScalar>;

  BivariatePoly() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int t_power, int r_power, const ExactScalar& c);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly scaled(const ExactScalar& c) const;

  BivariatePoly d_dt() const;
  /// Set t = r; result is a polynomial in r.
  Poly1 at_t_equals_r() const;
  /// Set r = value; result is a polynomial in t.
  Poly1 at_r(const ExactScalar& value) const;

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
  friend std::optional<ExactScalar> proportionality(const BivariatePoly& a, const BivariatePoly& b);

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace hc
