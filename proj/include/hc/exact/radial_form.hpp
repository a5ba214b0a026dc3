#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hc/exact/polynomial.hpp"
#include "hc/exact/scalar.hpp"

namespace hc {

/// Exact evaluation point.
struct ExactPoint {
  std::vector<Rational> coords;
  int dim() const { return static_cast<int>(coords.size()); }
};

/// Floating evaluation point.
struct Point {
  std::vector<double> coords;
  int dim() const { return static_cast<int>(coords.size()); }
};

struct EvalResult {
  std::complex<double> value;
  /// Set when the whole evaluation stayed in exact arithmetic
  /// (rational point, rational radius, no exponential weight).
  std::optional<ExactScalar> exact;
};

/// N(x, r) / (r^m (1 + r^2)^c) * exp(-alpha r), with r^2 = sum x_i^2.
///
/// Every instance is kept canonical: r-parity of numerator terms is at most one,
/// and (m, c) are minimal (the numerator is not divisible by r when m > 0, nor by
/// 1 + r^2 when c > 0). The zero form has m = c = 0 and alpha = 0.
class RadialForm {
 public:
  RadialForm() : RadialForm(3) {}
  explicit RadialForm(int dim);
  RadialForm(Poly numerator, int r_power, int cauchy_power, Rational exp_rate);

  static RadialForm zero(int dim) { return RadialForm(dim); }
  static RadialForm constant(int dim, const ExactScalar& c);
  static RadialForm coordinate(int dim, int axis);
  static RadialForm radius(int dim);
  /// r^k for any integer k.
  static RadialForm radius_power(int dim, int k);
  /// (1 + r^2)^(-c)
  static RadialForm cauchy(int dim, int c);
  static RadialForm exponential(int dim, const Rational& rate);
  static RadialForm polynomial(Poly p) { return RadialForm(std::move(p), 0, 0, Rational(0)); }

  int dim() const { return dim_; }
  const Poly& numerator() const { return num_; }
  int r_power() const { return r_power_; }
  int cauchy_power() const { return cauchy_power_; }
  const Rational& exp_rate() const { return exp_rate_; }

  bool is_zero() const { return num_.is_zero(); }
  /// No denominators, no odd radius powers, no exponential.
  bool is_polynomial() const;

  RadialForm& operator+=(const RadialForm& o);
  RadialForm& operator-=(const RadialForm& o);
  RadialForm& operator*=(const RadialForm& o);
  friend RadialForm operator+(RadialForm a, const RadialForm& b) { return a += b; }
  friend RadialForm operator-(RadialForm a, const RadialForm& b) { return a -= b; }
  friend RadialForm operator*(RadialForm a, const RadialForm& b) { return a *= b; }
  RadialForm operator-() const { return scaled(ExactScalar(-1)); }
  RadialForm scaled(const ExactScalar& c) const;
  friend RadialForm operator*(const ExactScalar& c, const RadialForm& f) { return f.scaled(c); }

  RadialForm conj() const;

  /// Decided by cross-multiplication onto a common denominator.
  friend bool operator==(const RadialForm& a, const RadialForm& b);

  /// If a = c * b for a scalar c, returns c. Zero forms count as proportional only to each other.
  friend std::optional<ExactScalar> proportionality(const RadialForm& a, const RadialForm& b);

  /// Substitution x -> lambda x. Requires cauchy_power == 0.
  RadialForm rescaled(const Rational& lambda) const;

  /// Embed a form of dimension d into dimension d' > d (new coordinates unused).
  /// Only forms that do not involve the radius can be embedded.
  RadialForm embedded(int new_dim) const;

  std::string str() const;

 private:
  void normalize();

  int dim_;
  Poly num_;
  int r_power_ = 0;
  int cauchy_power_ = 0;
  Rational exp_rate_{0};
};

/// Canonical representative; a no-op for values of this type, exposed for tests.
RadialForm normalize(const RadialForm& f);

RadialForm derivative(const RadialForm& f, int axis);
RadialForm laplacian(const RadialForm& f);
/// (x . grad) f
RadialForm euler_degree(const RadialForm& f);

/// Evaluation. Throws std::domain_error at a pole.
EvalResult evaluate(const RadialForm& f, const ExactPoint& p);
EvalResult evaluate(const RadialForm& f, const Point& p);

/// If every term of f is homogeneous of the same degree, returns that degree.
std::optional<int> homogeneity_degree(const RadialForm& f);

}  // namespace hc
