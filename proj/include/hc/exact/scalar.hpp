#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always renders as "p/q" (integers as "p/1") so the JSON form is uniform.
std::string format_rational(const Rational& q);

Integer factorial(long n);
/// n!! with the conventions (-1)!! = 0!! = 1.
Integer double_factorial(long n);
Integer binomial(long n, long k);
Rational rational_pow(const Rational& base, long exponent);
/// num/den in lowest terms.
Rational ratio(long num, long den);

/// Gaussian rational a + b i. Arithmetic is exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always real.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  /// Human-readable form, e.g. "3/2", "-i", "1/2+3i".
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// i^k for any integer k.
ExactScalar i_power(long k);

std::ostream& operator<<(std::ostream& os, const ExactScalar& z);

}  // namespace hc
