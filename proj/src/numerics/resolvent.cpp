#include "hc/numerics/resolvent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hc/numerics/kernels.hpp"
#include "hc/special/families.hpp"

namespace hc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi2 = 2 * kPi * kPi;

}  // namespace

ResolventResult resolvent(const ResolventQuery& q) {
  if (!(std::abs(q.cos_angle) <= 1)) throw std::domain_error("|cos_angle| must not exceed 1");
  if (std::abs(q.cos_angle) >= 1) throw std::domain_error("series diverge at coincident and antipodal points");
  const double lam = q.lambda;
  const double nearest = std::round(lam);
  if (nearest >= 1 && std::abs(lam - nearest) < 1e-9) throw std::domain_error("lambda is at a pole");
  if (q.terms < 1 || q.terms + 1 <= lam + 1) throw std::invalid_argument("terms must be >= 1 and exceed lambda");

  const double phi = std::acos(q.cos_angle);
  const double s = std::sin(phi);
  const double sh = std::sin(phi / 2);
  const int K = q.terms;
  std::vector<double> p89, p87, p88, acc;
  for (int k = 0; k <= K; ++k) {
    const double c = chebyshev_u(k, q.cos_angle);
    const double m = k + 1;
    p89.push_back(m * m * c / (m - lam));
    p87.push_back(c);
    p88.push_back(m * c);
    acc.push_back(c / (m * (m - lam)));
  }
  ResolventResult r;
  const double M = K + 1;
  // sum_{m>M} sin(m phi) g(m) ~ g(M+1) cos((M + 1/2) phi) / (2 sin(phi/2))
  const double tail_lead = std::cos((M + 0.5) * phi) / (2 * sh * s * (M + 1 - lam));
  const double l2 = lam * lam / kTwoPi2;
  r.series_route = (pairwise_sum(p89) - lam * pairwise_sum(p87) - pairwise_sum(p88)) / kTwoPi2 + l2 * tail_lead;
  r.smooth_sum = l2 * ((kPi - phi) / (2 * s) + lam * pairwise_sum(acc));
  r.tail_bound = std::abs(l2 * lam) / (sh * s * (M + 1) * (M + 1 - lam));
  r.assembled_value = r.smooth_sum + lam / (kTwoPi2 * (2 - 2 * q.cos_angle));
  return r;
}

PoleScan pole_scan(int pole, double cos_angle, int terms, double threshold) {
  if (pole < 1) throw std::invalid_argument("poles sit at positive integers");
  PoleScan out{pole, 0, 0, false};
  for (int j = 3; j <= 8; ++j) {
    const double lam = pole - std::pow(10.0, -j);
    const double g = std::abs(resolvent({cos_angle, lam, terms}).assembled_value);
    if (g > out.max_abs) {
      out.max_abs = g;
      out.at_lambda = lam;
    }
  }
  out.exceeds = out.max_abs > threshold;
  return out;
}

ResidueCheck residue_check(int k, double cos_angle, int terms) {
  const double eps = 1e-7;
  const double lam = k + 1 - eps;
  const double measured = (lam - (k + 1)) * resolvent({cos_angle, lam, terms}).smooth_sum;
  const double expected = -(k + 1.0) * (k + 1.0) * chebyshev_u(k, cos_angle) / kTwoPi2;
  return {k, measured, expected, std::abs(measured - expected) / std::abs(expected)};
}

}  // namespace hc
