#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "clarke/kernels.hpp"

namespace clarke {

// Points, directions and gradients are plain coordinate vectors; the ambient
// dimension is the length.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  return kernels::dot(a.data(), b.data(), a.size());
}

inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaled(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline Vec normalized(const Vec& a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return scaled(a, 1.0 / n);
}

inline bool all_finite(const Vec& a) {
  for (double x : a)
    if (!std::isfinite(x)) return false;
  return true;
}

// In-place Gaussian elimination with partial pivoting for the small dense
// systems of the min-norm solver (order <= dim + 2). Returns false when a
// pivot falls below the singularity threshold.
inline bool solve_dense(std::vector<Vec> a, Vec b, Vec& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-13) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri][c] * x[c];
    x[ri] = s / a[ri][ri];
  }
  return true;
}

}  // namespace clarke
