#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "clarke/vec.hpp"

// Reference oracles for the verification suite and the property tests.
// These are deliberately written against different algorithms than the
// production solvers they check: lattice enumeration with pairwise-exchange
// polish instead of Wolfe corrals, and a phase-1 tableau simplex instead of
// the min-norm pointedness test.

namespace clarke::oracles {

// Global minimum of |sum w_i p_i|^2 over the simplex: full simplex-lattice
// scan at resolution 1/lattice, then exact pairwise line-search descent
// (every feasible direction of the simplex is a pair exchange, so for this
// convex objective the polish converges to the global solution).
inline Vec min_norm_bruteforce(const std::vector<Vec>& pts, int lattice = 20) {
  const std::size_t m = pts.size();
  const std::size_t d = pts[0].size();

  Vec best_w(m, 0.0);
  double best_f = std::numeric_limits<double>::infinity();
  Vec w(m, 0.0);
  Vec x(d, 0.0);

  // enumerate all compositions of `lattice` into m parts
  std::vector<int> comp(m, 0);
  auto evaluate = [&] {
    for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<double>(comp[i]) / lattice;
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < d; ++j) x[j] += w[i] * pts[i][j];
    double f = norm_sq(x);
    if (f < best_f) {
      best_f = f;
      best_w = w;
    }
  };
  auto rec = [&](auto&& self, std::size_t level, int remaining) -> void {
    if (level + 1 == m) {
      comp[level] = remaining;
      evaluate();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      comp[level] = c;
      self(self, level + 1, remaining - c);
    }
  };
  rec(rec, 0, lattice);

  // pairwise exchange polish
  w = best_w;
  std::fill(x.begin(), x.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) x[j] += w[i] * pts[i][j];
  for (int sweep = 0; sweep < 20000; ++sweep) {
    double improvement = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        Vec q = sub(pts[i], pts[j]);
        double qq = norm_sq(q);
        if (qq == 0.0) continue;
        double t = -dot(x, q) / qq;
        t = std::clamp(t, -w[i], w[j]);
        if (std::fabs(t) < 1e-18) continue;
        double f0 = norm_sq(x);
        for (std::size_t c = 0; c < d; ++c) x[c] += t * q[c];
        double f1 = norm_sq(x);
        if (f1 > f0) {  // numerically null move; undo
          for (std::size_t c = 0; c < d; ++c) x[c] -= t * q[c];
          continue;
        }
        w[i] += t;
        w[j] -= t;
        improvement += f0 - f1;
      }
    }
    if (improvement < 1e-18) break;
  }
  return x;
}

// Phase-1 tableau simplex with Bland's rule for the feasibility system
//   sum_i lam_i g_i = 0,  sum_i lam_i = 1,  lam >= 0.
// Feasible iff the cone of the (unit) generators is NOT pointed.
inline bool lp_zero_in_convex_hull(const std::vector<Vec>& gens) {
  const std::size_t m = gens.size();
  const std::size_t d = gens[0].size();
  const std::size_t rows = d + 1;
  const std::size_t cols = m + rows;  // generators + artificials

  std::vector<Vec> t(rows, Vec(cols + 1, 0.0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < m; ++c) t[r][c] = gens[c][r];
  for (std::size_t c = 0; c < m; ++c) t[d][c] = 1.0;
  t[d][cols] = 1.0;  // rhs: (0,...,0,1)

  // flip rows so rhs >= 0 (already true) and install artificial basis
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    t[r][m + r] = 1.0;
    basis[r] = m + r;
  }
  auto cost = [&](std::size_t c) { return c >= m ? 1.0 : 0.0; };

  for (int iter = 0; iter < 20000; ++iter) {
    // reduced costs under the current basis
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      double z = 0.0;
      for (std::size_t r = 0; r < rows; ++r) z += cost(basis[r]) * t[r][c];
      if (cost(c) - z < -1e-9) {
        enter = c;  // Bland: first improving column
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] > 1e-9) {
        double ratio = t[r][cols] / t[r][enter];
        if (ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 && (leave == rows || basis[r] < basis[leave]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen for phase 1
    double piv = t[leave][enter];
    for (std::size_t c = 0; c <= cols; ++c) t[leave][c] /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      double f = t[r][enter];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  double objective = 0.0;
  for (std::size_t r = 0; r < rows; ++r) objective += cost(basis[r]) * t[r][cols];
  return objective <= 1e-9;
}

// Verdict "v belongs to the subdifferential of y^2/(2x) at the origin" by
// checking the subgradient inequality on a 100x100 grid of domain points.
inline bool parabola_membership_bruteforce(const Vec& v, double slack = 1e-9) {
  for (int i = 0; i < 100; ++i) {
    double x = 3.0 * (i + 1) / 100.0;
    for (int j = 0; j < 100; ++j) {
      double y = -3.0 + 6.0 * j / 99.0;
      double val = y * y / (2.0 * x) - v[0] * x - v[1] * y;
      if (val < -slack) return false;
    }
  }
  return true;
}

}  // namespace clarke::oracles
