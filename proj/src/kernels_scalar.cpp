#include "clarke/kernels.hpp"

// Reference backend. The 4-accumulator pattern below *is* the kernel
// contract; the AVX2 backend mirrors it lane for lane.

namespace clarke::kernels {
namespace {

double dot_impl(const double* a, const double* b, std::size_t n) {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += a[i] * b[i];
    c1 += a[i + 1] * b[i + 1];
    c2 += a[i + 2] * b[i + 2];
    c3 += a[i + 3] * b[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return ((c0 + c1) + (c2 + c3)) + tail;
}

double sum_impl(const double* a, std::size_t n) {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += a[i];
    c1 += a[i + 1];
    c2 += a[i + 2];
    c3 += a[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i];
  return ((c0 + c1) + (c2 + c3)) + tail;
}

void axpy_impl(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_impl(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void sq_accum_impl(const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * x[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dot_impl, sum_impl, axpy_impl, scale_impl, sq_accum_impl, "scalar"};
  return ops;
}

}  // namespace clarke::kernels
