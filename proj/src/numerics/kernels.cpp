#include "hc/numerics/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hc {

namespace {

constexpr std::size_t kLeaf = 8;

std::atomic<int> g_threads{1};

double sum_range(const double* p, std::size_t n) {
  if (n <= kLeaf) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t h = n / 2;
  return sum_range(p, h) + sum_range(p + h, n - h);
}

}  // namespace

std::string to_string(SimdLevel level) { return level == SimdLevel::avx2 ? "avx2" : "scalar"; }

bool cpu_has_avx2() {
#if defined(HC_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

SimdLevel resolve_simd(const char* request) {
  const std::string r = request ? request : "auto";
  if (r == "scalar") return SimdLevel::scalar;
  if (r == "avx2" || r == "auto" || r.empty()) return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
  throw std::invalid_argument("HC_SIMD must be scalar, avx2 or auto");
}

SimdLevel active_simd() {
  static const SimdLevel level = resolve_simd(std::getenv("HC_SIMD"));
  return level;
}

namespace detail {

void kernel_terms_scalar(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                         double* out, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    double t = nodes.weight[i] * values[i];
    if (power != 0) {
      double d2 = 0;
      for (int c = 0; c < nodes.dim; ++c) {
        const double d = nodes.coord[c][i] - point[c];
        d2 = c == 0 ? d * d : d2 + d * d;
      }
      t = power == 1 ? t / std::sqrt(d2) : t / d2;
    }
    out[i] = t;
  }
}

#ifndef HC_HAVE_AVX2_TU
void kernel_terms_avx2(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                       double* out, std::size_t begin, std::size_t end) {
  kernel_terms_scalar(nodes, values, point, power, out, begin, end);
}
#endif

}  // namespace detail

void kernel_terms(SimdLevel level, const NodeBlock& nodes, const double* values, const std::array<double, 4>& point,
                  int power, double* out, std::size_t begin, std::size_t end) {
  if (power < 0 || power > 2) throw std::invalid_argument("kernel power must be 0, 1 or 2");
  if (nodes.dim < 1 || nodes.dim > 4) throw std::invalid_argument("node dimension must be in 1..4");
  if (level == SimdLevel::avx2 && cpu_has_avx2()) {
    detail::kernel_terms_avx2(nodes, values, point, power, out, begin, end);
  } else {
    detail::kernel_terms_scalar(nodes, values, point, power, out, begin, end);
  }
}

double pairwise_sum(std::span<const double> terms) { return sum_range(terms.data(), terms.size()); }

void set_default_threads(int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  g_threads = threads;
}

int default_threads() { return g_threads; }

double kernel_integral(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power,
                       SimdLevel level, int threads) {
  if (threads == 0) threads = default_threads();
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  std::vector<double> terms(nodes.size);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(nodes.size / 4096, 1));
  if (workers <= 1) {
    kernel_terms(level, nodes, values, point, power, terms.data(), 0, nodes.size);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (nodes.size + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(nodes.size, b + chunk);
      pool.emplace_back([&, b, e] { kernel_terms(level, nodes, values, point, power, terms.data(), b, e); });
    }
    for (auto& t : pool) t.join();
  }
  return pairwise_sum(terms);
}

double kernel_integral(const NodeBlock& nodes, const double* values, const std::array<double, 4>& point, int power) {
  return kernel_integral(nodes, values, point, power, active_simd(), 0);
}

}  // namespace hc
