#pragma once

#include <array>
#include <vector>

#include "hc/numerics/kernels.hpp"

namespace hc {

/// Product rule on the unit sphere S^(dim-1), dim 3 or 4. Node storage is
/// structure-of-arrays so the kernels can stream it.
struct QuadratureRule {
  int dim = 0;
  int level = 0;
  std::array<std::vector<double>, 4> coords;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::array<double, 4> node(std::size_t i) const;
  NodeBlock block() const;
};

/// S^3: Gauss-Chebyshev (second kind) in cos(chi), Gauss-Legendre in cos(theta),
/// 2*level uniform azimuths. Exact for polynomials of total degree <= 2*level - 1.
/// The fourth coordinate is cos(chi).
QuadratureRule s3_quadrature(int level);

/// S^2: Gauss-Legendre in cos(theta) times 2*level azimuths, same exactness.
QuadratureRule s2_quadrature(int level);

/// 2 pi^2 for S^3, 4 pi for S^2.
double sphere_area(int dim);

/// Largest relative error of the rule over every monomial of total degree <= max_degree,
/// against exact sphere averages.
double exactness_error(const QuadratureRule& rule, int max_degree);

}  // namespace hc
