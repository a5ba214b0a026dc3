#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hc/numerics/kernels.hpp"
#include "hc/numerics/quadrature.hpp"

using namespace hc;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct Cloud {
  std::array<std::vector<double>, 4> c;
  std::vector<double> w, v;
  NodeBlock block(int dim) const {
    NodeBlock b;
    b.dim = dim;
    for (int i = 0; i < dim; ++i) b.coord[i] = c[i].data();
    b.weight = w.data();
    b.size = w.size();
    return b;
  }
};

Cloud cloud(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Cloud k;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& c : k.c) c.push_back(u(rng));
    k.w.push_back(u(rng) + 1.5);
    k.v.push_back(u(rng));
  }
  return k;
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("override parsing") {
    CHECK(resolve_simd("scalar") == SimdLevel::scalar);
    CHECK(resolve_simd("avx2") == (cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar));
    CHECK(resolve_simd(nullptr) == resolve_simd("auto"));
    CHECK_THROWS_AS(resolve_simd("sse9"), std::invalid_argument);
    CHECK(to_string(SimdLevel::avx2) == "avx2");
  }

  TEST_CASE("kernel equivalence") {
    for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 1000u, 10007u}) {
      const Cloud k = cloud(n, static_cast<unsigned>(n));
      for (int dim : {3, 4}) {
        for (int power : {0, 1, 2}) {
          const std::array<double, 4> p{3.1, -2.2, 2.5, 4.0};
          std::vector<double> a(n), b(n);
          kernel_terms(SimdLevel::scalar, k.block(dim), k.v.data(), p, power, a.data(), 0, n);
          kernel_terms(SimdLevel::avx2, k.block(dim), k.v.data(), p, power, b.data(), 0, n);
          for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(a[i], b[i]));
          const double s = kernel_integral(k.block(dim), k.v.data(), p, power, SimdLevel::scalar, 1);
          const double v = kernel_integral(k.block(dim), k.v.data(), p, power, SimdLevel::avx2, 1);
          CHECK(same_bits(s, v));
        }
      }
    }
  }

  TEST_CASE("partial ranges") {
    const Cloud k = cloud(37, 3);
    const std::array<double, 4> p{2, 2, 2, 2};
    std::vector<double> a(37, -1), b(37, -1);
    kernel_terms(SimdLevel::scalar, k.block(4), k.v.data(), p, 2, a.data(), 5, 30);
    kernel_terms(SimdLevel::avx2, k.block(4), k.v.data(), p, 2, b.data(), 5, 30);
    for (std::size_t i = 0; i < 37; ++i) CHECK(same_bits(a[i], b[i]));
    CHECK(a[4] == -1);
    CHECK(a[30] == -1);
  }

  TEST_CASE("thread count does not change results") {
    const QuadratureRule q = s3_quadrature(20);
    std::vector<double> v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = q.coords[0][i] * q.coords[3][i] + 0.5;
    const std::array<double, 4> p{0.1, 0.2, -0.3, 0.1};
    const double ref = kernel_integral(q.block(), v.data(), p, 2, SimdLevel::scalar, 1);
    for (int t : {2, 3, 4, 7}) {
      CHECK(same_bits(kernel_integral(q.block(), v.data(), p, 2, SimdLevel::scalar, t), ref));
      CHECK(same_bits(kernel_integral(q.block(), v.data(), p, 2, SimdLevel::avx2, t), ref));
    }
  }

  TEST_CASE("pairwise reduction") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0));
    CHECK(pairwise_sum(std::vector<double>{}) == 0);
    CHECK_THROWS_AS(set_default_threads(0), std::invalid_argument);
    set_default_threads(2);
    CHECK(default_threads() == 2);
    set_default_threads(1);
  }
}
