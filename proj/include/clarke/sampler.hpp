#pragma once

#include <cstdint>
#include <vector>

#include "clarke/function_model.hpp"
#include "clarke/geometry.hpp"
#include "clarke/vec.hpp"

namespace clarke {

struct SamplingConfig {
  double radius = 0.01;           // sampling ball radius
  int max_samples = 1000;         // trial count
  std::uint64_t seed = 0;
  double horizon_threshold = 1e3; // gradients above this norm become horizon rays
  double fd_step = kFdDefaultStep;
  double tol = 0.05;              // stationarity tolerance
};

struct GradientCloud {
  Vec base_point;
  std::vector<Vec> kept_gradients;      // norms <= horizon_threshold
  std::vector<Vec> horizon_directions;  // unit vectors g/|g| for |g| > threshold
  int rejected_outside_domain = 0;
  int rejected_nondifferentiable = 0;
  SamplingConfig config;
};

struct SubdifferentialEstimate {
  MinkowskiSet set;  // conv(kept) + cone(horizon + normals)
  GradientCloud cloud;
  std::vector<Vec> lifted_generators;  // in R^{n+1}, last coordinate in [-1, 0]
};

struct StationarityReport {
  double distance_to_zero = 0.0;
  bool is_stationary = false;
  Vec witness;
  int draws_used = 0;
};

// `count` points uniform in the open ball, via normalized Gaussian direction
// and U^{1/n}-scaled radius; sample i is a pure function of (seed, i).
std::vector<Vec> sample_ball(const Vec& center, double radius, int count, std::uint64_t seed);

// Draws max_samples trial points in the ball around `center` and classifies
// gradients. Points outside the domain and points where no gradient can be
// obtained are discarded and counted.
//
// Trial points use a per-coordinate cube-law density (strictly positive a.e.
// on the ball): coordinate j of draw i is radius * u^3 with u uniform on
// [-1,1], rejected to the open ball. Concentrating samples near the
// coordinate axes is what makes gradient blow-up directions and narrow
// curvature cusps reachable at desk-scale sample counts.
GradientCloud build_cloud(const ExtendedFunction& f, const SamplingConfig& config, const Vec& center);

// hull = conv(kept), cone = cone(horizon + normals). Lifted generators:
// (g,-1)/sqrt(1+|g|^2) for kept g, (u,0) for horizon u, (n,0) for unit
// normals.
SubdifferentialEstimate assemble_estimate(const GradientCloud& cloud, const FiniteCone& normals);

// Extracts {v : (v,-1) in cone(lifted_generators)} back into hull + cone
// form. Throws "empty slice" when no generator has a negative last
// coordinate.
MinkowskiSet lifted_slice(const SubdifferentialEstimate& estimate);

StationarityReport test_stationarity(const SubdifferentialEstimate& estimate, double tol);

double estimate_distance(const SubdifferentialEstimate& estimate, const Vec& v);

// Max over a deterministic grid of probe directions of the support gap
// between estimate and reference; two infinities contribute 0, a
// finite/infinite mismatch is +infinity.
double hausdorff_vs_reference(const SubdifferentialEstimate& estimate,
                              const ReferenceSubdifferential& ref, int probe_dirs);

}  // namespace clarke
