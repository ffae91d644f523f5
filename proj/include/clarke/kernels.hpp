#pragma once

#include <cstddef>
#include <string>

namespace clarke::kernels {

// Batch double-precision primitives behind the hot loops (gradient cloud
// classification, the projected-gradient distance solver, support scans).
//
// Reductions use a fixed 4-lane blocked accumulation order:
//
//   acc[l] += a[4k+l] * b[4k+l]   for k = 0,1,...   l = 0..3
//   result = ((acc[0]+acc[1]) + (acc[2]+acc[3])) + scalar tail
//
// Every backend implements exactly this order, so scalar and AVX2 results
// are bit-identical (equivalence-tested in tests/test_kernels.cpp). Keep it
// that way when touching a backend: no FMA, no reassociation.
struct Ops {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
  // acc[i] += x[i] * x[i]
  void (*sq_accum)(const double* x, double* acc, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();
// nullptr when the binary was built without AVX2 or the CPU lacks it.
const Ops* avx2_ops();

// Active backend: AVX2 when available, overridable with CLARKE_KIT_SIMD
// (values: "scalar", "avx2"). Resolved once per process.
const Ops& active_ops();

inline double dot(const double* a, const double* b, std::size_t n) { return active_ops().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return active_ops().sum(a, n); }
inline void axpy(double alpha, const double* x, double* y, std::size_t n) { active_ops().axpy(alpha, x, y, n); }
inline void scale(double alpha, double* x, std::size_t n) { active_ops().scale(alpha, x, n); }
inline void sq_accum(const double* x, double* acc, std::size_t n) { active_ops().sq_accum(x, acc, n); }

}  // namespace clarke::kernels
