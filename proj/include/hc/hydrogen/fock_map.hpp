#pragma once

#include <array>
#include <utility>

#include "hc/exact/scalar.hpp"

namespace hc {

using Vec3Q = std::array<Rational, 3>;

struct FockPoint {
  std::array<Rational, 3> xi;
  Rational xi0;
};

/// xi = 2p/(1+p^2), xi0 = (p^2-1)/(p^2+1)
FockPoint fock_map(const Vec3Q& p);
/// Inverse map; throws std::domain_error at the north pole xi0 = 1.
Vec3Q fock_unmap(const FockPoint& q);
/// (1+p^2)/2
Rational conformal_factor(const Vec3Q& p);
/// d^3p = volume_factor(p) dS with volume_factor = (1+p^2)^3 / 8
Rational volume_factor(const Vec3Q& p);

/// (1/|p-p'|^2, (2/(p^2+1)) / |xi-xi'|^2_4 (2/(p'^2+1))); throws at coincident points.
std::pair<Rational, Rational> fock_kernel_identity(const Vec3Q& p, const Vec3Q& q);

struct FockPointD {
  std::array<double, 3> xi;
  double xi0;
};

FockPointD fock_map(const std::array<double, 3>& p);
std::array<double, 3> fock_unmap(const FockPointD& q);

}  // namespace hc
