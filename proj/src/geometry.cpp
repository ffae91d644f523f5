#include "clarke/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "clarke/rng.hpp"

namespace clarke {

namespace {

void check_dim(const Vec& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim) throw std::invalid_argument(std::string("dimension mismatch: ") + what);
}

}  // namespace

Polytope::Polytope(int d, std::vector<Vec> verts) : dim(d), vertices(std::move(verts)) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  for (const Vec& v : vertices) {
    check_dim(v, dim, "polytope vertex");
    if (!all_finite(v)) throw std::invalid_argument("vertex coordinates must be finite");
  }
}

FiniteCone::FiniteCone(int d, std::vector<Vec> gens) : dim(d), generators(std::move(gens)) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  for (const Vec& g : generators) {
    check_dim(g, dim, "cone generator");
    if (!all_finite(g)) throw std::invalid_argument("generator coordinates must be finite");
    if (norm_sq(g) == 0.0) throw std::invalid_argument("zero generator");
  }
}

MinkowskiSet::MinkowskiSet(Polytope h, FiniteCone c) : hull(std::move(h)), cone(std::move(c)) {
  if (hull.dim != cone.dim) throw std::invalid_argument("dimension mismatch: hull vs cone");
}

// ---------------------------------------------------------------------------
// Wolfe's min-norm point
// ---------------------------------------------------------------------------

namespace {

// Minimizes |sum alpha_i p_i|^2 subject to sum alpha_i = 1 (signs free) via
// the bordered KKT system. Falls back to a ridged Gram matrix when the
// corral degenerates numerically.
bool affine_min_norm(const std::vector<Vec>& pts, const std::vector<std::size_t>& corral, Vec& alpha) {
  const std::size_t s = corral.size();
  std::vector<Vec> m(s + 1, Vec(s + 1, 0.0));
  Vec rhs(s + 1, 0.0);
  rhs[0] = 1.0;
  for (std::size_t i = 0; i < s; ++i) {
    m[0][i + 1] = 1.0;
    m[i + 1][0] = 1.0;
    for (std::size_t j = 0; j < s; ++j) m[i + 1][j + 1] = dot(pts[corral[i]], pts[corral[j]]);
  }
  Vec sol;
  if (!solve_dense(m, rhs, sol)) {
    double tr = 0.0;
    for (std::size_t i = 0; i < s; ++i) tr += m[i + 1][i + 1];
    double ridge = 1e-12 * (tr / static_cast<double>(s) + 1.0);
    for (std::size_t i = 0; i < s; ++i) m[i + 1][i + 1] += ridge;
    if (!solve_dense(m, rhs, sol)) return false;
  }
  alpha.assign(s, 0.0);
  for (std::size_t i = 0; i < s; ++i) alpha[i] = sol[i + 1];
  return true;
}

void axpy_into(Vec& y, const Vec& x, double a) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec combine(const std::vector<Vec>& pts, const std::vector<std::size_t>& corral, const Vec& w, int dim) {
  Vec x(static_cast<std::size_t>(dim), 0.0);
  for (std::size_t i = 0; i < corral.size(); ++i) axpy_into(x, pts[corral[i]], w[i]);
  return x;
}

}  // namespace

MinNormResult min_norm_point(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const int dim = static_cast<int>(points[0].size());
  for (const Vec& p : points) check_dim(p, dim, "min_norm_point input");

  // Duplicates are removed by exact coordinate equality; the corral algebra
  // requires affinely independent working sets.
  std::vector<Vec> pts;
  std::vector<std::size_t> original;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dup = false;
    for (const Vec& q : pts)
      if (q == points[i]) {
        dup = true;
        break;
      }
    if (!dup) {
      pts.push_back(points[i]);
      original.push_back(i);
    }
  }
  const std::size_t m = pts.size();

  std::size_t start = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (norm_sq(pts[i]) < norm_sq(pts[start])) start = i;

  std::vector<std::size_t> corral{start};
  Vec w{1.0};
  Vec x = pts[start];

  const std::size_t max_major = 4 * m + 64;
  for (std::size_t major = 0; major < max_major; ++major) {
    const double c = norm_sq(x);
    const double stop_tol = kTolOpt * (1.0 + c);

    std::size_t best = 0;
    double best_val = dot(x, pts[0]);
    for (std::size_t j = 1; j < m; ++j) {
      double v = dot(x, pts[j]);
      if (v < best_val) {
        best_val = v;
        best = j;
      }
    }
    if (best_val >= c - stop_tol) break;
    if (std::find(corral.begin(), corral.end(), best) != corral.end()) break;  // numerical stall

    corral.push_back(best);
    w.push_back(0.0);

    for (std::size_t minor = 0; minor < 4 * m + 64; ++minor) {
      Vec alpha;
      if (!affine_min_norm(pts, corral, alpha)) {
        // Degenerate corral: drop the newest point and bail out of the cycle.
        corral.pop_back();
        w.pop_back();
        break;
      }
      bool feasible = true;
      for (double a : alpha)
        if (a < -1e-12) {
          feasible = false;
          break;
        }
      if (feasible) {
        w = alpha;
        for (double& a : w) a = std::max(a, 0.0);
        break;
      }
      // Move toward alpha until the first weight vanishes, then drop it
      // (lowest index among ties by construction of the scan).
      double theta = 1.0;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (alpha[i] < 1e-12 && w[i] > alpha[i]) theta = std::min(theta, w[i] / (w[i] - alpha[i]));
      }
      for (std::size_t i = 0; i < corral.size(); ++i) w[i] = (1.0 - theta) * w[i] + theta * alpha[i];
      for (std::size_t i = corral.size(); i-- > 0;) {
        if (w[i] <= 1e-12) {
          corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(i));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      double total = std::accumulate(w.begin(), w.end(), 0.0);
      if (total > 0.0)
        for (double& a : w) a /= total;
    }
    x = combine(pts, corral, w, dim);
  }

  MinNormResult res;
  res.point = x;
  for (std::size_t i = 0; i < corral.size(); ++i)
    if (w[i] > 0.0) res.support.emplace_back(original[corral[i]], w[i]);
  return res;
}

// ---------------------------------------------------------------------------
// Distance to a Minkowski set
// ---------------------------------------------------------------------------

namespace {

struct Soa {
  // column-major: one contiguous array per coordinate
  std::vector<Vec> cols;
  std::size_t count = 0;

  void build(const std::vector<Vec>& pts, int dim) {
    count = pts.size();
    cols.assign(static_cast<std::size_t>(dim), Vec(count, 0.0));
    for (std::size_t i = 0; i < count; ++i)
      for (int j = 0; j < dim; ++j) cols[static_cast<std::size_t>(j)][i] = pts[i][static_cast<std::size_t>(j)];
  }
};

}  // namespace

std::vector<Vec> extreme_vertices(const std::vector<Vec>& points, int dim) {
  std::vector<Vec> uniq;
  for (const Vec& p : points) {
    bool dup = false;
    for (const Vec& q : uniq)
      if (q == p) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() <= 2) return uniq;
  if (dim == 1) {
    Vec lo = uniq[0], hi = uniq[0];
    for (const Vec& p : uniq) {
      if (p[0] < lo[0]) lo = p;
      if (p[0] > hi[0]) hi = p;
    }
    return {lo, hi};
  }
  if (dim != 2) return uniq;

  // Andrew's monotone chain.
  std::vector<Vec> pts = uniq;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull;
  for (const Vec& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size(); i-- > 0;) {
    const Vec& p = pts[i];
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  hull.pop_back();
  return hull;
}

// Wolfe-type active-set iteration for min |x - v| over conv(E) + cone(G):
// the working set holds at most dim+1 hull vertices (affine weights summing
// to one) and dim rays (nonnegative multipliers); each major cycle adds the
// most violated atom, each minor cycle re-solves the equality-constrained
// least-squares system and drops atoms whose weights cross zero. Terminates
// on the Frank-Wolfe optimality conditions
//   <x-v, e_i - p> >= -tol  for all vertices,  <x-v, g_j> >= -tol  for rays.
DistanceResult distance_to_minkowski(const Vec& v, const MinkowskiSet& set) {
  const int dim = set.dim();
  const auto nd = static_cast<std::size_t>(dim);
  check_dim(v, dim, "distance_to_minkowski probe");

  // conv(emptyset) = {0}: an empty hull contributes the origin.
  std::vector<Vec> hull_pts = set.hull.vertices.empty() ? std::vector<Vec>{Vec(nd, 0.0)}
                                                        : set.hull.vertices;
  if (dim == 2 && hull_pts.size() > 8) hull_pts = extreme_vertices(hull_pts, dim);

  // shift v to the origin; unit-normalize generators (rescales multipliers
  // only, the set is unchanged)
  std::vector<Vec> pts;
  pts.reserve(hull_pts.size());
  for (const Vec& e : hull_pts) pts.push_back(sub(e, v));
  std::vector<Vec> gens;
  gens.reserve(set.cone.generators.size());
  for (const Vec& g : set.cone.generators) gens.push_back(normalized(g));

  const std::size_t mh = pts.size();
  const std::size_t mc = gens.size();
  Soa H, C;
  H.build(pts, dim);
  C.build(gens, dim);

  std::vector<std::size_t> cp;  // corral vertices
  std::vector<std::size_t> cr;  // corral rays
  Vec wp, wr;                   // their weights
  {
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < mh; ++i)
      if (norm_sq(pts[i]) < norm_sq(pts[nearest])) nearest = i;
    cp.push_back(nearest);
    wp.push_back(1.0);
  }

  auto corral_point = [&]() {
    Vec x(nd, 0.0);
    for (std::size_t i = 0; i < cp.size(); ++i) axpy_into(x, pts[cp[i]], wp[i]);
    for (std::size_t i = 0; i < cr.size(); ++i) axpy_into(x, gens[cr[i]], wr[i]);
    return x;
  };

  // KKT solve of min |P w| s.t. affine weights sum to 1; ray weights free.
  auto solve_corral = [&](Vec& alpha, Vec& beta) -> bool {
    const std::size_t sp = cp.size(), sr = cr.size(), s = sp + sr;
    std::vector<Vec> m(s + 1, Vec(s + 1, 0.0));
    Vec rhs(s + 1, 0.0);
    auto atom = [&](std::size_t i) -> const Vec& { return i < sp ? pts[cp[i]] : gens[cr[i - sp]]; };
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m[i][j] = dot(atom(i), atom(j));
    for (std::size_t i = 0; i < sp; ++i) {
      m[i][s] = 1.0;
      m[s][i] = 1.0;
    }
    rhs[s] = 1.0;
    Vec sol;
    if (!solve_dense(m, rhs, sol)) {
      double tr = 0.0;
      for (std::size_t i = 0; i < s; ++i) tr += m[i][i];
      double ridge = 1e-12 * (tr / static_cast<double>(s) + 1.0);
      for (std::size_t i = 0; i < s; ++i) m[i][i] += ridge;
      if (!solve_dense(m, rhs, sol)) return false;
    }
    alpha.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(sp));
    beta.assign(sol.begin() + static_cast<std::ptrdiff_t>(sp),
                sol.begin() + static_cast<std::ptrdiff_t>(sp + sr));
    return true;
  };

  Vec x = corral_point();
  Vec batch_h(mh, 0.0), batch_c(mc, 0.0);

  for (int major = 0; major < 1024; ++major) {
    // violation scan: batch inner products <x, atom> over the SoA columns
    std::fill(batch_h.begin(), batch_h.end(), 0.0);
    std::fill(batch_c.begin(), batch_c.end(), 0.0);
    for (std::size_t j = 0; j < nd; ++j) {
      if (x[j] != 0.0) {
        kernels::axpy(x[j], H.cols[j].data(), batch_h.data(), mh);
        if (mc != 0) kernels::axpy(x[j], C.cols[j].data(), batch_c.data(), mc);
      }
    }
    double hull_part = 0.0;  // <x, p> with p the hull part of x
    for (std::size_t i = 0; i < cp.size(); ++i) hull_part += wp[i] * batch_h[cp[i]];

    std::size_t best_pt = 0;
    for (std::size_t i = 1; i < mh; ++i)
      if (batch_h[i] < batch_h[best_pt]) best_pt = i;
    double viol_pt = hull_part - batch_h[best_pt];

    std::size_t best_ray = 0;
    double viol_ray = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mc; ++i)
      if (-batch_c[i] > viol_ray) {
        viol_ray = -batch_c[i];
        best_ray = i;
      }

    const double tol = kTolOpt * (1.0 + norm_sq(x));
    bool add_ray = mc != 0 && viol_ray > viol_pt && viol_ray > tol;
    bool add_pt = !add_ray && viol_pt > tol;
    if (!add_ray && !add_pt) break;

    if (add_ray) {
      if (std::find(cr.begin(), cr.end(), best_ray) != cr.end()) break;  // numerical stall
      cr.push_back(best_ray);
      wr.push_back(0.0);
    } else {
      if (std::find(cp.begin(), cp.end(), best_pt) != cp.end()) break;
      cp.push_back(best_pt);
      wp.push_back(0.0);
    }

    for (std::size_t minor = 0; minor < 2 * (cp.size() + cr.size()) + 16; ++minor) {
      Vec alpha, beta;
      if (!solve_corral(alpha, beta)) {
        // degenerate corral: give up on the newest atom
        if (add_ray) {
          cr.pop_back();
          wr.pop_back();
        } else {
          cp.pop_back();
          wp.pop_back();
        }
        break;
      }
      bool feasible = true;
      for (double a : alpha) feasible = feasible && a >= -1e-12;
      for (double b : beta) feasible = feasible && b >= -1e-12;
      if (feasible) {
        wp = alpha;
        wr = beta;
        for (double& a : wp) a = std::max(a, 0.0);
        for (double& b : wr) b = std::max(b, 0.0);
        break;
      }
      // step toward the solution until the first weight vanishes
      double theta = 1.0;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] < 1e-12 && wp[i] > alpha[i])
          theta = std::min(theta, wp[i] / (wp[i] - alpha[i]));
      for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] < 1e-12 && wr[i] > beta[i]) theta = std::min(theta, wr[i] / (wr[i] - beta[i]));
      for (std::size_t i = 0; i < wp.size(); ++i) wp[i] = (1.0 - theta) * wp[i] + theta * alpha[i];
      for (std::size_t i = 0; i < wr.size(); ++i) wr[i] = (1.0 - theta) * wr[i] + theta * beta[i];
      for (std::size_t i = wp.size(); i-- > 0;) {
        if (wp[i] <= 1e-12 && wp.size() > 1) {
          cp.erase(cp.begin() + static_cast<std::ptrdiff_t>(i));
          wp.erase(wp.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      for (std::size_t i = wr.size(); i-- > 0;) {
        if (wr[i] <= 1e-12) {
          cr.erase(cr.begin() + static_cast<std::ptrdiff_t>(i));
          wr.erase(wr.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      double total = std::accumulate(wp.begin(), wp.end(), 0.0);
      if (total > 0.0)
        for (double& a : wp) a /= total;
    }
    x = corral_point();
  }

  DistanceResult res;
  res.witness = add(v, x);
  res.distance = norm(x);
  return res;
}

bool contains(const Vec& v, const MinkowskiSet& set, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  return distance_to_minkowski(v, set).distance <= tol;
}

bool cone_is_pointed(const FiniteCone& cone) {
  if (cone.generators.empty()) return true;
  std::vector<Vec> unit;
  unit.reserve(cone.generators.size());
  for (const Vec& g : cone.generators) unit.push_back(normalized(g));
  return norm(min_norm_point(unit).point) > kTolPointed;
}

std::vector<std::pair<double, Vec>> caratheodory_reduce(const Vec& v, const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const int dim = static_cast<int>(v.size());
  for (const Vec& p : points) check_dim(p, dim, "caratheodory_reduce input");

  std::vector<Vec> shifted;
  shifted.reserve(points.size());
  for (const Vec& p : points) shifted.push_back(sub(p, v));
  MinNormResult mn = min_norm_point(shifted);
  if (norm(mn.point) > kTolOpt * (1.0 + norm(v)) + kTolOpt) throw std::runtime_error("not in hull");

  std::vector<std::size_t> idx;
  Vec w;
  for (auto& [i, wi] : mn.support) {
    idx.push_back(i);
    w.push_back(wi);
  }

  // The Wolfe corral is already affinely independent, hence of size at most
  // dim+1; the loop below is a guard for numerically marginal supports.
  while (idx.size() > static_cast<std::size_t>(dim) + 1) {
    const std::size_t s = idx.size();
    // affine dependence: sum gamma_i p_i = 0, sum gamma_i = 0, gamma != 0
    std::vector<Vec> a(static_cast<std::size_t>(dim) + 1, Vec(s, 0.0));
    for (std::size_t i = 0; i < s; ++i) {
      for (int j = 0; j < dim; ++j) a[static_cast<std::size_t>(j)][i] = points[idx[i]][static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(dim)][i] = 1.0;
    }
    // Solve A gamma = 0 with gamma_last = 1 via least squares on the first
    // s-1 columns; fall back to dropping the smallest weight on failure.
    std::vector<Vec> m(s - 1, Vec(s - 1, 0.0));
    Vec rhs(s - 1, 0.0);
    for (std::size_t r = 0; r < s - 1; ++r)
      for (std::size_t c = 0; c < s - 1; ++c)
        for (std::size_t k = 0; k <= static_cast<std::size_t>(dim); ++k) m[r][c] += a[k][r] * a[k][c];
    for (std::size_t r = 0; r < s - 1; ++r)
      for (std::size_t k = 0; k <= static_cast<std::size_t>(dim); ++k) rhs[r] -= a[k][r] * a[k][s - 1];
    Vec gamma_head;
    if (!solve_dense(m, rhs, gamma_head)) {
      std::size_t drop = 0;
      for (std::size_t i = 1; i < s; ++i)
        if (w[i] < w[drop]) drop = i;
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(drop));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(drop));
      continue;
    }
    Vec gamma = gamma_head;
    gamma.push_back(1.0);
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s; ++i)
      if (gamma[i] > 1e-14) t = std::min(t, w[i] / gamma[i]);
    if (!std::isfinite(t)) {
      for (double& g : gamma) g = -g;
      t = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < s; ++i)
        if (gamma[i] > 1e-14) t = std::min(t, w[i] / gamma[i]);
    }
    for (std::size_t i = 0; i < s; ++i) w[i] -= t * gamma[i];
    for (std::size_t i = s; i-- > 0;) {
      if (w[i] <= 1e-14) {
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<std::pair<double, Vec>> out;
  for (std::size_t i = 0; i < idx.size(); ++i) out.emplace_back(w[i] / total, points[idx[i]]);
  return out;
}

double support_value(const MinkowskiSet& set, const Vec& direction) {
  const int dim = set.dim();
  check_dim(direction, dim, "support direction");
  const double dn = norm(direction);
  if (dn == 0.0) throw std::invalid_argument("zero direction");

  for (const Vec& g : set.cone.generators) {
    if (dot(g, direction) / (norm(g) * dn) > kRecessionTol) return std::numeric_limits<double>::infinity();
  }
  if (set.hull.vertices.empty()) return 0.0;
  double s = -std::numeric_limits<double>::infinity();
  for (const Vec& h : set.hull.vertices) s = std::max(s, dot(h, direction));
  return s;
}

double truncated_cone_support(const FiniteCone& cone, const Vec& direction) {
  MinkowskiSet m(Polytope(cone.dim, {}), cone);
  Vec d = normalized(direction);
  double dd = distance_to_minkowski(d, m).distance;
  return std::sqrt(std::max(0.0, 1.0 - dd * dd));
}

std::vector<Vec> direction_grid(int dim, int count) {
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  if (dim == 1) {
    for (int k = 0; k < count; ++k) dirs.push_back(Vec{k % 2 == 0 ? 1.0 : -1.0});
    return dirs;
  }
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count);
      dirs.push_back(Vec{std::cos(a), std::sin(a)});
    }
    return dirs;
  }
  if (dim == 3) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = golden * static_cast<double>(k);
      dirs.push_back(Vec{r * std::cos(phi), r * std::sin(phi), z});
    }
    return dirs;
  }
  rng::Key key = rng::make_key(0x517ec7ull, rng::kStreamDirections);
  for (int k = 0; k < count; ++k) {
    Vec d(static_cast<std::size_t>(dim), 0.0);
    for (int j = 0; j < dim; j += 2) {
      double z0, z1;
      rng::gaussian_pair(key, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j / 2), z0, z1);
      d[static_cast<std::size_t>(j)] = z0;
      if (j + 1 < dim) d[static_cast<std::size_t>(j + 1)] = z1;
    }
    dirs.push_back(normalized(d));
  }
  return dirs;
}

namespace {

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

bool boundary_generates_cone_check(const FiniteCone& cone, int n_dirs, std::uint64_t seed,
                                   double support_tol) {
  if (n_dirs < 1) throw std::invalid_argument("n_dirs must be positive");
  if (!cone_is_pointed(cone)) throw std::runtime_error("has lineality");
  const int dim = cone.dim;

  std::vector<Vec> unit;
  for (const Vec& g : cone.generators) {
    Vec u = normalized(g);
    bool dup = false;
    for (const Vec& q : unit)
      if (dist(q, u) < 1e-12) {
        dup = true;
        break;
      }
    if (!dup) unit.push_back(u);
  }

  // extreme rays: u is extreme iff it is not in the conic hull of the others
  std::vector<Vec> extremes;
  if (unit.size() == 1) {
    extremes = unit;
  } else {
    for (std::size_t i = 0; i < unit.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < unit.size(); ++j)
        if (j != i) others.push_back(unit[j]);
      MinkowskiSet rest(Polytope(dim, {}), FiniteCone(dim, others));
      if (distance_to_minkowski(unit[i], rest).distance > 1e-7) extremes.push_back(unit[i]);
    }
  }
  if (extremes.empty()) extremes = unit;  // total degeneracy guard

  std::vector<Vec> samples = extremes;
  if (dim == 3 && extremes.size() >= 2) {
    // rays interior to 2D faces, found by the supporting-hyperplane test
    std::vector<std::pair<std::size_t, std::size_t>> faces;
    for (std::size_t i = 0; i < extremes.size(); ++i) {
      for (std::size_t j = i + 1; j < extremes.size(); ++j) {
        Vec nrm = cross3(extremes[i], extremes[j]);
        double nn = norm(nrm);
        if (nn < 1e-12) continue;
        nrm = scaled(nrm, 1.0 / nn);
        bool all_le = true, all_ge = true;
        for (const Vec& u : unit) {
          double d = dot(nrm, u);
          all_le = all_le && d <= 1e-9;
          all_ge = all_ge && d >= -1e-9;
        }
        if (all_le || all_ge) faces.emplace_back(i, j);
      }
    }
    rng::Key key = rng::make_key(seed, rng::kStreamConeRays);
    std::uint64_t k = 0;
    while (static_cast<int>(samples.size()) < n_dirs && !faces.empty()) {
      auto [i, j] = faces[k % faces.size()];
      double a = rng::u01(key, k, 0);
      Vec ray = add(scaled(extremes[i], a), scaled(extremes[j], 1.0 - a));
      if (norm(ray) > 1e-12) samples.push_back(normalized(ray));
      ++k;
    }
  }
  while (static_cast<int>(samples.size()) < n_dirs)
    samples.push_back(samples[samples.size() % extremes.size()]);

  FiniteCone regenerated(dim, samples);
  for (const Vec& d : direction_grid(dim, 64)) {
    double a = truncated_cone_support(cone, d);
    double b = truncated_cone_support(regenerated, d);
    if (std::fabs(a - b) > support_tol) return false;
  }
  return true;
}

}  // namespace clarke
