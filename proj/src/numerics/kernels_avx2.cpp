#include <immintrin.h>

#include "hc/numerics/kernels.hpp"

namespace hc::detail {

void kernel_terms_avx2(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                       double* out, std::size_t begin, std::size_t end) {
  std::size_t i = begin;
  __m256d p[4];
  for (int c = 0; c < nodes.dim; ++c) p[c] = _mm256_set1_pd(point[c]);
  for (; i + 4 <= end; i += 4) {
    __m256d t = _mm256_mul_pd(_mm256_loadu_pd(nodes.weight + i), _mm256_loadu_pd(values + i));
    if (power != 0) {
      __m256d d2 = _mm256_setzero_pd();
      for (int c = 0; c < nodes.dim; ++c) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(nodes.coord[c] + i), p[c]);
        const __m256d sq = _mm256_mul_pd(d, d);
        d2 = c == 0 ? sq : _mm256_add_pd(d2, sq);
      }
      t = power == 1 ? _mm256_div_pd(t, _mm256_sqrt_pd(d2)) : _mm256_div_pd(t, d2);
    }
    _mm256_storeu_pd(out + i, t);
  }
  kernel_terms_scalar(nodes, values, point, power, out, i, end);
}

}  // namespace hc::detail
