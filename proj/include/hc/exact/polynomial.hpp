#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "hc/exact/scalar.hpp"

namespace hc {

inline constexpr int kMaxDim = 4;

/// Monomial x^a r^p with p in {0, 1}. Exponents of unused coordinates stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxDim> exps{};
  std::uint8_t parity = 0;

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  /// Homogeneity degree counting the radius factor.
  int total_degree() const { return degree() + parity; }

  auto operator<=>(const Monomial&) const = default;
};

/// Element of Q(i)[x_1..x_d][r] / (r^2 - sum x_i^2), stored with r-parity <= 1.
/// Map order puts the first coordinate exponent most significant, which the
/// division routines rely on.
class Poly {
 public:
  using Terms = std::map<Monomial, ExactScalar>;

  Poly() = default;
  explicit Poly(int dim) : dim_(dim) {}

  static Poly constant(int dim, const ExactScalar& c);
  static Poly coordinate(int dim, int axis);
  /// sum of squares S = x_1^2 + ... + x_d^2
  static Poly sum_of_squares(int dim);
  static Poly radius(int dim);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_odd_part() const;
  /// Highest total degree among terms (-1 for zero).
  int max_total_degree() const;

  void add_term(const Monomial& m, const ExactScalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const ExactScalar& c) const;
  Poly operator-() const { return scaled(ExactScalar(-1)); }

  Poly times_coordinate(int axis) const;
  Poly times_sum_of_squares() const;
  /// Multiply by r (swaps parity; r * r -> S).
  Poly times_radius() const;
  Poly times_radius_power(int k) const;
  Poly times_one_plus_s_power(int k) const;

  /// Parity-0 and parity-1 parts, both returned with parity 0.
  Poly even_part() const;
  Poly odd_part() const;
  Poly with_parity(std::uint8_t p) const;

  /// Exact quotient by S (or 1 + S when `plus_one`), or nullopt when not divisible.
  std::optional<Poly> divide_by_quadric(bool plus_one) const;

  /// d/dx_axis acting on the x-monomials only (r treated as a constant symbol).
  Poly formal_derivative(int axis) const;
  /// Complex conjugate of every coefficient.
  Poly conj() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  int dim_ = 3;
  Terms terms_;
};

}  // namespace hc
