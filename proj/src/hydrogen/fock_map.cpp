#include "hc/hydrogen/fock_map.hpp"

#include <stdexcept>

namespace hc {

namespace {

Rational norm2(const Vec3Q& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }

Vec3Q canonical(Vec3Q p) {
  for (auto& v : p) v.canonicalize();
  return p;
}

}  // namespace

FockPoint fock_map(const Vec3Q& raw) {
  const Vec3Q p = canonical(raw);
  const Rational p2 = norm2(p);
  const Rational d = 1 + p2;
  FockPoint q;
  for (int i = 0; i < 3; ++i) q.xi[i] = 2 * p[i] / d;
  q.xi0 = (p2 - 1) / d;
  return q;
}

Vec3Q fock_unmap(const FockPoint& raw) {
  FockPoint q = raw;
  for (auto& v : q.xi) v.canonicalize();
  q.xi0.canonicalize();
  const Rational d = 1 - q.xi0;
  if (sgn(d) == 0) throw std::domain_error("north pole has no finite preimage");
  return {q.xi[0] / d, q.xi[1] / d, q.xi[2] / d};
}

Rational conformal_factor(const Vec3Q& p) { return (1 + norm2(p)) / 2; }

Rational volume_factor(const Vec3Q& p) {
  const Rational d = 1 + norm2(p);
  return d * d * d / 8;
}

std::pair<Rational, Rational> fock_kernel_identity(const Vec3Q& rp, const Vec3Q& rq) {
  const Vec3Q p = canonical(rp);
  const Vec3Q q = canonical(rq);
  const Vec3Q diff{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
  const Rational d2 = norm2(diff);
  if (sgn(d2) == 0) throw std::domain_error("kernel is singular at coincident points");
  const FockPoint a = fock_map(p);
  const FockPoint b = fock_map(q);
  Rational s2 = (a.xi0 - b.xi0) * (a.xi0 - b.xi0);
  for (int i = 0; i < 3; ++i) s2 += (a.xi[i] - b.xi[i]) * (a.xi[i] - b.xi[i]);
  const Rational rhs = (2 / (1 + norm2(p))) * (1 / s2) * (2 / (1 + norm2(q)));
  return {1 / d2, rhs};
}

FockPointD fock_map(const std::array<double, 3>& p) {
  const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double d = 1 + p2;
  return {{2 * p[0] / d, 2 * p[1] / d, 2 * p[2] / d}, (p2 - 1) / d};
}

std::array<double, 3> fock_unmap(const FockPointD& q) {
  const double d = 1 - q.xi0;
  if (d == 0.0) throw std::domain_error("north pole has no finite preimage");
  return {q.xi[0] / d, q.xi[1] / d, q.xi[2] / d};
}

}  // namespace hc
