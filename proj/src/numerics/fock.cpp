#include "hc/numerics/fock.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hc/hydrogen/fock_map.hpp"
#include "hc/hydrogen/states.hpp"
#include "hc/special/families.hpp"
#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

constexpr double kPi = std::numbers::pi;

double norm(const std::array<double, 4>& v, int dim) {
  double s = 0;
  for (int c = 0; c < dim; ++c) s += v[c] * v[c];
  return std::sqrt(s);
}

double dot(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

void require_interior(double r) {
  if (!(r < 1)) throw std::domain_error("point must lie strictly inside the unit sphere");
}

std::vector<double> node_values(const QuadratureRule& q, const std::function<double(const std::array<double, 4>&)>& f) {
  std::vector<double> v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) v[i] = f(q.node(i));
  return v;
}

const RadialForm& first_component(const SymTensor& t) {
  if (t.is_zero()) throw std::logic_error("tensor has no nonzero component");
  return t.components().begin()->second;
}

}  // namespace

NumericCheck make_check(std::string identity, int index, int level, double lhs, double rhs, double tolerance) {
  const double err = std::abs(rhs) > 0 ? std::abs(lhs - rhs) / std::abs(rhs) : std::abs(lhs - rhs);
  return {std::move(identity), index, level, lhs, rhs, err, tolerance, err < tolerance};
}

int level_for(double radius, int degree, double tolerance) {
  int trunc = 0;
  if (radius > 0) trunc = static_cast<int>(std::ceil(std::log(tolerance) / std::log(radius)));
  const int total = std::max(trunc, 0) + degree;
  return std::clamp(total / 2 + 1, 1, 400);
}

CompiledPoly::CompiledPoly(const RadialForm& f) : dim_(f.dim()) {
  if (!f.is_polynomial()) throw std::invalid_argument("compiled evaluation needs a polynomial form");
  for (const auto& [m, c] : f.numerator().terms()) {
    if (!c.is_real()) throw std::invalid_argument("compiled evaluation needs real coefficients");
    std::array<int, 4> e{};
    for (int i = 0; i < dim_; ++i) e[i] = m.exps[i];
    terms_.emplace_back(c.re().get_d(), e);
  }
}

double CompiledPoly::operator()(const std::array<double, 4>& x) const {
  double s = 0;
  for (const auto& [c, e] : terms_) {
    double t = c;
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < e[i]; ++j) t *= x[i];
    }
    s += t;
  }
  return s;
}

NumericCheck newton_check_3d(const RadialForm& harmonic, int l, const std::array<double, 3>& point, int level) {
  if (harmonic.dim() != 3) throw std::invalid_argument("expected a 3D harmonic");
  const std::array<double, 4> p{point[0], point[1], point[2], 0};
  const double r = norm(p, 3);
  require_interior(r);
  if (level == 0) level = level_for(r, l);
  const QuadratureRule q = s2_quadrature(level);
  const CompiledPoly y(harmonic);
  const std::vector<double> v = node_values(q, y);
  const NodeBlock b = q.block();
  const double lhs = kernel_integral(b, v.data(), p, 1);
  const double rhs = 4 * kPi / (2 * l + 1) * y(p);
  return make_check("newton-3d", l, level, lhs, rhs, 1e-8);
}

NumericCheck newton_check_3d(int l, const std::array<double, 3>& point, int level) {
  return newton_check_3d(solid_projection(l, 0), l, point, level);
}

NumericCheck fock_check_4d(int n, int l, const std::array<double, 4>& point, int level) {
  check_quantum_numbers(n, l);
  const double r = norm(point, 4);
  require_interior(r);
  if (level == 0) level = level_for(r, n - 1);
  const SymTensor h = solid_harmonic_4d(n, l);
  const CompiledPoly m(first_component(h));
  const QuadratureRule q = s3_quadrature(level);
  const std::vector<double> v = node_values(q, m);
  const double lhs = kernel_integral(q.block(), v.data(), point, 2);
  const double rhs = 2 * kPi * kPi / n * m(point);
  return make_check("fock-4d", n, level, lhs, rhs, 1e-8);
}

std::vector<NumericCheck> gegenbauer_kernel_checks(int k, const std::array<double, 4>& x, const std::array<double, 4>& y,
                                                   int level) {
  if (k < 0) throw std::invalid_argument("negative Gegenbauer index");
  if (std::abs(norm(x, 4) - 1) > 1e-12) throw std::invalid_argument("x must be a unit vector");
  const double ry = norm(y, 4);
  require_interior(ry);
  if (ry == 0) throw std::domain_error("y must be nonzero");
  std::array<double, 4> yh = y;
  for (auto& c : yh) c /= ry;
  if (level == 0) level = level_for(ry, 2 * k + 1);
  const QuadratureRule q = s3_quadrature(level);
  const NodeBlock b = q.block();
  const double area = 2 * kPi * kPi;
  std::vector<NumericCheck> out;

  const std::vector<double> ck = node_values(q, [&](const std::array<double, 4>& s) { return chebyshev_u(k, dot(x, s)); });
  const double eigen = kernel_integral(b, ck.data(), y, 2);
  out.push_back(make_check("gegenbauer-eigen", k, level, eigen, area / (k + 1) * std::pow(ry, k) * chebyshev_u(k, dot(x, yh)),
                           1e-8));

  for (int j = 0; j <= k + 1; ++j) {
    std::vector<double> prod = ck;
    for (std::size_t i = 0; i < q.size(); ++i) prod[i] *= chebyshev_u(j, dot(q.node(i), yh));
    const double lhs = kernel_integral(b, prod.data(), y, 0);
    const double rhs = j == k ? area / (k + 1) * chebyshev_u(k, dot(x, yh)) : 0.0;
    out.push_back(make_check("gegenbauer-orthogonality j=" + std::to_string(j), k, level, lhs, rhs, 1e-10));
  }

  const double c = dot(x, yh);
  const int terms = std::max(1, static_cast<int>(std::ceil(std::log(1e-17) / std::log(ry))) + 2);
  std::vector<double> series(static_cast<std::size_t>(terms));
  double rk = 1;
  for (int j = 0; j < terms; ++j, rk *= ry) series[static_cast<std::size_t>(j)] = rk * chebyshev_u(j, c);
  out.push_back(make_check("gegenbauer-generating", k, terms, pairwise_sum(series), 1 / (1 - 2 * ry * c + ry * ry), 1e-12));
  return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("HC_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw std::invalid_argument("HC_SEED must be an unsigned integer");
  return v;
}

std::vector<NumericCheck> momentum_sphere_checks(int n, int l, int count, std::uint64_t seed, double rho) {
  check_quantum_numbers(n, l);
  require_interior(rho);
  const RadialForm a = first_component(momentum_state(n, l).a);
  const auto b_on_sphere = [&](const std::array<double, 4>& s) {
    const std::array<double, 3> p = fock_unmap(FockPointD{{s[0], s[1], s[2]}, s[3]});
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    return (1 + p2) * (1 + p2) * evaluate(a, Point{{p[0], p[1], p[2]}}).value.real();
  };
  const int level = level_for(rho, n - 1);
  const QuadratureRule q = s3_quadrature(level);
  const std::vector<double> v = node_values(q, b_on_sphere);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<NumericCheck> out;
  while (static_cast<int>(out.size()) < count) {
    std::array<double, 4> s{g(rng), g(rng), g(rng), g(rng)};
    const double len = norm(s, 4);
    for (auto& c : s) c /= len;
    if (s[3] > 0.9) continue;
    const double target = b_on_sphere(s);
    if (std::abs(target) < 1e-3) continue;
    std::array<double, 4> y = s;
    for (auto& c : y) c *= rho;
    const double integral = kernel_integral(q.block(), v.data(), y, 2);
    const double surface = n / (2 * kPi * kPi) * integral / std::pow(rho, n - 1);
    out.push_back(make_check("momentum-sphere", n, level, surface, target, 1e-6));
  }
  return out;
}

}  // namespace hc
