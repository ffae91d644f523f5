#include "clarke/kernels.hpp"

#include <immintrin.h>

// AVX2 backend. Per-lane operation sequence matches the scalar reference
// exactly (mul then add, no FMA -- this TU is compiled without -mfma and
// with -ffp-contract=off), so results are bit-identical to scalar_ops().

namespace clarke::kernels {
namespace {

double dot_impl(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double c[4];
  _mm256_store_pd(c, acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return ((c[0] + c[1]) + (c[2] + c[3])) + tail;
}

double sum_impl(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  alignas(32) double c[4];
  _mm256_store_pd(c, acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i];
  return ((c[0] + c[1]) + (c[2] + c[3])) + tail;
}

void axpy_impl(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_impl(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void sq_accum_impl(const double* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d va = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(va, _mm256_mul_pd(vx, vx)));
  }
  for (; i < n; ++i) acc[i] += x[i] * x[i];
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{dot_impl, sum_impl, axpy_impl, scale_impl, sq_accum_impl, "avx2"};
  return &ops;
}

}  // namespace clarke::kernels
