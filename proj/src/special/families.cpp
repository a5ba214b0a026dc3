#include "hc/special/families.hpp"

#include <stdexcept>

namespace hc {

Rational pochhammer(const Rational& a, long j) {
  Rational p = 1;
  for (long i = 0; i < j; ++i) p *= a + i;
  return p;
}

Poly1 gauss_f(int k, const Rational& beta, const Rational& scale) {
  if (k < 0) throw std::invalid_argument("gauss_f needs k >= 0");
  for (int j = 0; j < k; ++j) {
    if (sgn(beta + j) == 0) throw std::domain_error("series pole: beta is a non-positive integer");
  }
  std::vector<ExactScalar> c;
  Rational term = 1;
  for (int j = 0; j <= k; ++j) {
    c.emplace_back(term);
    if (j < k) term *= Rational(j - k) * scale / ((beta + j) * (j + 1));
  }
  return Poly1(std::move(c), 'r');
}

Poly1 hyp2f1(int k, const Rational& b, const Rational& c) {
  if (k < 0) throw std::invalid_argument("hyp2f1 needs k >= 0");
  for (int j = 0; j < k; ++j) {
    if (sgn(c + j) == 0) throw std::domain_error("series pole: c is a non-positive integer");
  }
  std::vector<ExactScalar> out;
  Rational term = 1;
  for (int j = 0; j <= k; ++j) {
    out.emplace_back(term);
    if (j < k) term *= Rational(j - k) * (b + j) / ((c + j) * (j + 1));
  }
  return Poly1(std::move(out), 'u');
}

Poly1 gegenbauer(int k, const Rational& alpha) {
  if (k < 0) throw std::invalid_argument("gegenbauer needs k >= 0");
  const Poly1 z = Poly1::monomial(1, ExactScalar(1));
  Poly1 prev({ExactScalar(1)});
  if (k == 0) return prev;
  Poly1 cur = z.scaled(ExactScalar(2 * alpha));
  for (int n = 2; n <= k; ++n) {
    Poly1 next = (z * cur).scaled(ExactScalar(Rational(2) * (alpha + n - 1) / n)) -
                 prev.scaled(ExactScalar((2 * alpha + n - 2) / n));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 legendre(int l) {
  if (l < 0) throw std::invalid_argument("legendre needs l >= 0");
  const Poly1 t = Poly1::monomial(1, ExactScalar(1), 't');
  Poly1 prev({ExactScalar(1)}, 't');
  if (l == 0) return prev;
  Poly1 cur = t;
  for (int n = 2; n <= l; ++n) {
    Poly1 next = (t * cur).scaled(ExactScalar(ratio(2 * n - 1, n))) - prev.scaled(ExactScalar(ratio(n - 1, n)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 laguerre(int k, int a) {
  if (k < 0 || a < 0) throw std::invalid_argument("laguerre needs k, a >= 0");
  std::vector<ExactScalar> c;
  for (int m = 0; m <= k; ++m) {
    Rational v(binomial(k + a, k - m), factorial(m));
    v.canonicalize();
    c.emplace_back(m % 2 ? -v : v);
  }
  return Poly1(std::move(c), 'x');
}

double chebyshev_u(int k, double z) {
  if (k < 0) return 0.0;
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * z;
  for (int n = 2; n <= k; ++n) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace hc
