#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clarke/vec.hpp"

namespace clarke {

// Optimality residual tolerance for min-norm / distance solvers.
inline constexpr double kTolOpt = 1e-9;
// Min-norm threshold under which a normalized generator hull contains 0.
inline constexpr double kTolPointed = 1e-7;
// Angular margin deciding whether a cone generator makes a support value
// +infinity. Sampled horizon rays carry O(1/threshold) directional error, so
// a strict sign test would report spurious unboundedness in directions that
// are orthogonal to the true recession cone.
inline constexpr double kRecessionTol = 1e-2;

// V-representation polytope. An empty vertex list stands for {0} (the
// conv(emptyset) = {0} convention), which is why the ambient dimension is
// stored explicitly.
struct Polytope {
  int dim = 0;
  std::vector<Vec> vertices;

  Polytope() = default;
  Polytope(int d, std::vector<Vec> verts);
};

// Finitely generated convex cone; cone(emptyset) = {0}. Zero generators are
// rejected at construction.
struct FiniteCone {
  int dim = 0;
  std::vector<Vec> generators;

  FiniteCone() = default;
  FiniteCone(int d, std::vector<Vec> gens);
};

// D = conv(hull.vertices) + cone(cone.generators).
struct MinkowskiSet {
  Polytope hull;
  FiniteCone cone;

  MinkowskiSet() = default;
  MinkowskiSet(Polytope h, FiniteCone c);
  int dim() const { return hull.dim; }
};

struct MinNormResult {
  Vec point;
  // (input index, weight) pairs of the active corral; weights are >= 0 and
  // sum to 1, and the corral is affinely independent (size <= dim + 1).
  std::vector<std::pair<std::size_t, double>> support;
};

struct DistanceResult {
  double distance = 0.0;
  Vec witness;  // nearest point of the set
};

// Projection of the origin onto conv(points) by Wolfe's method (major/minor
// cycles over affinely independent corrals; lowest index wins ties).
MinNormResult min_norm_point(const std::vector<Vec>& points);

// dist(v, hull + cone), solved as one convex QP over (simplex weights,
// nonnegative cone multipliers) by projected gradient with an Armijo line
// search; certified by a dual support bound when it closes.
DistanceResult distance_to_minkowski(const Vec& v, const MinkowskiSet& set);

bool contains(const Vec& v, const MinkowskiSet& set, double tol);

// True iff cone(generators) contains no line: the min-norm point of the unit
// normalized generators stays away from the origin.
bool cone_is_pointed(const FiniteCone& cone);

// Writes v as a convex combination of at most dim+1 of the given points.
// Throws "not in hull" when v is farther than kTolOpt from conv(points).
std::vector<std::pair<double, Vec>> caratheodory_reduce(const Vec& v, const std::vector<Vec>& points);

// sup{<d, x> : x in set}; +infinity iff some cone generator escapes in
// direction d (unit-normalized inner product above kRecessionTol).
double support_value(const MinkowskiSet& set, const Vec& direction);

// Support of the radius-1 truncation of the cone in direction d, i.e. the
// norm of the conic projection of d. Equal cones give equal values.
double truncated_cone_support(const FiniteCone& cone, const Vec& direction);

// Certifies cone = cone(boundary rays) for a pointed, full-dimensional cone
// by sampling boundary rays (extreme rays plus, in 3D, rays inside 2D faces)
// and comparing truncated supports on a deterministic direction grid.
// Throws "has lineality" when the cone contains a line.
bool boundary_generates_cone_check(const FiniteCone& cone, int n_dirs, std::uint64_t seed,
                                   double support_tol = 1e-7);

// Deterministic unit-direction grid: signs in 1D, equal angles in 2D,
// Fibonacci sphere in 3D, fixed-key normalized Gaussians above.
std::vector<Vec> direction_grid(int dim, int count);

// Extreme vertices of conv(points): exact monotone chain in 2D, min/max in
// 1D, exact dedup otherwise.
std::vector<Vec> extreme_vertices(const std::vector<Vec>& points, int dim);

}  // namespace clarke
