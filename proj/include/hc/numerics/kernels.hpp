#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>

namespace hc {

enum class SimdLevel { scalar, avx2 };

std::string to_string(SimdLevel level);
bool cpu_has_avx2();

/// Reads an override value ("scalar", "avx2" or "auto"); avx2 falls back to scalar
/// when the CPU or the build lacks it. Unknown values throw std::invalid_argument.
SimdLevel resolve_simd(const char* request);
/// resolve_simd(getenv("HC_SIMD")), evaluated once.
SimdLevel active_simd();

/// Structure-of-arrays view over quadrature nodes.
struct NodeBlock {
  int dim = 0;
  std::array<const double*, 4> coord{};
  const double* weight = nullptr;
  std::size_t size = 0;
};

/// out[i] = w_i v_i / |p - x_i|^power for i in [begin, end), power in {0, 1, 2}.
void kernel_terms(SimdLevel level, const NodeBlock& nodes, const double* values, const std::array<double, 4>& point,
                  int power, double* out, std::size_t begin, std::size_t end);

/// Fixed-shape pairwise summation; the tree depends only on the length.
double pairwise_sum(std::span<const double> terms);

/// Number of worker threads used by kernel_integral when threads == 0.
void set_default_threads(int threads);
int default_threads();

/// sum_i w_i v_i / |p - x_i|^power. Bitwise identical for every thread count and SIMD level.
double kernel_integral(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                       SimdLevel level, int threads = 0);
double kernel_integral(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power);

namespace detail {
void kernel_terms_scalar(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                         double* out, std::size_t begin, std::size_t end);
void kernel_terms_avx2(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                       double* out, std::size_t begin, std::size_t end);
}  // namespace detail

}  // namespace hc
