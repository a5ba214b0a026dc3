#pragma once

#include <string>

namespace hc {

struct ResolventQuery {
  double cos_angle = 0;
  double lambda = 0;
  int terms = 400;
};

/// The delta(x - y) term is never evaluated; it is reported by name.
struct ResolventResult {
  /// (lambda^2 / 2 pi^2) sum_k C_k(cos) / (k + 1 - lambda), closed-form subtraction route
  double smooth_sum = 0;
  /// smooth_sum + lambda / (2 pi^2 |x - y|^2)
  double assembled_value = 0;
  /// partial sums of the plain series minus the two subtracted series, with a leading tail term
  double series_route = 0;
  /// bound on the truncation error of smooth_sum
  double tail_bound = 0;
  std::string singular_part = "delta(x-y)";
};

/// Throws std::domain_error when lambda is within 1e-9 of a positive integer or
/// |cos_angle| >= 1, std::invalid_argument when terms is too small.
ResolventResult resolvent(const ResolventQuery& q);

struct PoleScan {
  int pole;
  double max_abs;
  double at_lambda;
  bool exceeds;
};

/// |G| for lambda = pole - 10^-j, j = 3..8, all within 10^-3 of the pole.
PoleScan pole_scan(int pole, double cos_angle, int terms, double threshold = 1e3);

struct ResidueCheck {
  int k;
  double measured;
  double expected;
  double rel_error;
};

/// (lambda - (k+1)) smooth_sum at lambda just below k + 1 against -(k+1)^2 C_k(cos) / 2 pi^2.
ResidueCheck residue_check(int k, double cos_angle, int terms);

}  // namespace hc
