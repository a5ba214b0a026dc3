#include "hc/numerics/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hc/exact/integrals.hpp"
#include "hc/tensor/sym_tensor.hpp"

namespace hc {

namespace {

struct Rule1 {
  std::vector<double> x;
  std::vector<double> w;
};

Rule1 gauss_legendre(int n) {
  Rule1 r;
  for (double z : boost::math::legendre_p_zeros<double>(n)) {
    const double d = boost::math::legendre_p_prime(n, z);
    const double w = 2.0 / ((1.0 - z * z) * d * d);
    r.x.push_back(z);
    r.w.push_back(w);
    if (z != 0.0) {
      r.x.push_back(-z);
      r.w.push_back(w);
    }
  }
  return r;
}

// int_{-1}^{1} f(u) sqrt(1 - u^2) du
Rule1 gauss_chebyshev_u(int n) {
  Rule1 r;
  for (int j = 1; j <= n; ++j) {
    const double a = j * std::numbers::pi / (n + 1);
    r.x.push_back(std::cos(a));
    r.w.push_back(std::numbers::pi / (n + 1) * std::sin(a) * std::sin(a));
  }
  return r;
}

void check_level(int level) {
  if (level < 1) throw std::invalid_argument("quadrature level must be >= 1");
}

}  // namespace

std::array<double, 4> QuadratureRule::node(std::size_t i) const {
  std::array<double, 4> p{};
  for (int c = 0; c < dim; ++c) p[c] = coords[c][i];
  return p;
}

NodeBlock QuadratureRule::block() const {
  NodeBlock b;
  b.dim = dim;
  for (int c = 0; c < dim; ++c) b.coord[c] = coords[c].data();
  b.weight = weights.data();
  b.size = weights.size();
  return b;
}

QuadratureRule s2_quadrature(int level) {
  check_level(level);
  QuadratureRule q;
  q.dim = 3;
  q.level = level;
  const Rule1 gl = gauss_legendre(level);
  const int nphi = 2 * level;
  const double dphi = 2 * std::numbers::pi / nphi;
  for (std::size_t a = 0; a < gl.x.size(); ++a) {
    const double ct = gl.x[a];
    const double st = std::sqrt(1 - ct * ct);
    for (int b = 0; b < nphi; ++b) {
      const double phi = b * dphi;
      q.coords[0].push_back(st * std::cos(phi));
      q.coords[1].push_back(st * std::sin(phi));
      q.coords[2].push_back(ct);
      q.weights.push_back(gl.w[a] * dphi);
    }
  }
  return q;
}

QuadratureRule s3_quadrature(int level) {
  check_level(level);
  const QuadratureRule s2 = s2_quadrature(level);
  const Rule1 cu = gauss_chebyshev_u(level);
  QuadratureRule q;
  q.dim = 4;
  q.level = level;
  for (std::size_t a = 0; a < cu.x.size(); ++a) {
    const double cc = cu.x[a];
    const double sc = std::sqrt(1 - cc * cc);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      for (int c = 0; c < 3; ++c) q.coords[c].push_back(sc * s2.coords[c][i]);
      q.coords[3].push_back(cc);
      q.weights.push_back(cu.w[a] * s2.weights[i]);
    }
  }
  return q;
}

double sphere_area(int dim) {
  if (dim == 3) return 4 * std::numbers::pi;
  if (dim == 4) return 2 * std::numbers::pi * std::numbers::pi;
  throw std::invalid_argument("sphere area is provided for dim 3 and 4");
}

double exactness_error(const QuadratureRule& rule, int max_degree) {
  double worst = 0;
  const double area = sphere_area(rule.dim);
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& idx : sorted_indices(rule.dim, deg)) {
      const std::vector<int> e = index_counts(idx, rule.dim);
      std::vector<double> v(rule.size());
      for (std::size_t i = 0; i < rule.size(); ++i) {
        double m = 1;
        for (int c = 0; c < rule.dim; ++c) m *= std::pow(rule.coords[c][i], e[c]);
        v[i] = rule.weights[i] * m;
      }
      const double got = pairwise_sum(v);
      const double exact = area * sphere_average_monomial(e, rule.dim).get_d();
      worst = std::max(worst, std::abs(got - exact) / std::max(std::abs(exact), 1.0));
    }
  }
  return worst;
}

}  // namespace hc
