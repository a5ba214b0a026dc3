#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hc/exact/radial_form.hpp"
#include "hc/numerics/quadrature.hpp"

namespace hc {

struct NumericCheck {
  std::string identity;
  /// n, l or k depending on the identity
  int index = 0;
  int level = 0;
  double lhs = 0;
  double rhs = 0;
  /// relative when |rhs| > 0, absolute otherwise
  double rel_error = 0;
  double tolerance = 0;
  bool pass = false;
};

NumericCheck make_check(std::string identity, int index, int level, double lhs, double rhs, double tolerance);

/// Smallest level whose exactness covers degree + the truncation degree of the kernel
/// expansion at the given interior radius.
int level_for(double radius, int degree, double tolerance = 1e-15);

/// Fast double evaluator for a real polynomial form.
class CompiledPoly {
 public:
  explicit CompiledPoly(const RadialForm& f);
  double operator()(const std::array<double, 4>& x) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<std::pair<double, std::array<int, 4>>> terms_;
};

/// int_{|x'|=1} Y(x') / |x - x'| dS' against 4 pi / (2l + 1) Y(x); Y is a real
/// homogeneous harmonic polynomial of degree l. level 0 picks level_for.
NumericCheck newton_check_3d(const RadialForm& harmonic, int l, const std::array<double, 3>& point, int level = 0);
/// Uses the zonal solid harmonic of degree l.
NumericCheck newton_check_3d(int l, const std::array<double, 3>& point, int level = 0);

/// int_{|y'|=1} M(y') / |y - y'|^2 dS' against (2 pi^2 / n) M(y), with M the first
/// component of solid_harmonic_4d(n, l).
NumericCheck fock_check_4d(int n, int l, const std::array<double, 4>& point, int level = 0);

/// Eigen-identity at interior y, orthogonality against C_j for j <= k + 1 and the
/// generating function at rho = |y|. x must be a unit vector.
std::vector<NumericCheck> gegenbauer_kernel_checks(int k, const std::array<double, 4>& x, const std::array<double, 4>& y,
                                                   int level = 0);

/// Momentum amplitude times (1 + p^2)^2 carried to the sphere and fed through the
/// sphere integral equation at rho * xi for `count` random points xi; the surface value
/// is recovered from the interior one by homogeneity.
std::vector<NumericCheck> momentum_sphere_checks(int n, int l, int count, std::uint64_t seed, double rho = 0.5);

/// HC_SEED if set, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace hc
