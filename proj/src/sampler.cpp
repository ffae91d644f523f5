#include "clarke/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "clarke/parallel.hpp"
#include "clarke/rng.hpp"

namespace clarke {

std::vector<Vec> sample_ball(const Vec& center, double radius, int count, std::uint64_t seed) {
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  if (count < 1) throw std::invalid_argument("count must be positive");
  const std::size_t n = center.size();
  const rng::Key key = rng::make_key(seed, rng::kStreamBall);

  std::vector<Vec> pts(static_cast<std::size_t>(count), Vec(n, 0.0));
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Vec d(n, 0.0);
      double nsq = 0.0;
      for (std::size_t j = 0; j < n; j += 2) {
        double z0, z1;
        rng::gaussian_pair(key, i, j / 2, z0, z1);
        d[j] = z0;
        if (j + 1 < n) d[j + 1] = z1;
      }
      for (double z : d) nsq += z * z;
      if (nsq == 0.0) d[0] = 1.0, nsq = 1.0;
      double u = rng::u01(key, i, 1000);
      double r = radius * std::pow(u, 1.0 / static_cast<double>(n));
      double s = r / std::sqrt(nsq);
      for (std::size_t j = 0; j < n; ++j) pts[i][j] = center[j] + s * d[j];
    }
  });
  return pts;
}

namespace {

// Cube-law in-ball draw for trial points; deterministic per (seed, index),
// attempts are slot-indexed so rejection keeps order independence.
Vec cloud_point(const Vec& center, double radius, rng::Key key, std::uint64_t index) {
  const std::size_t n = center.size();
  Vec x(n, 0.0);
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    double nsq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double u = 2.0 * rng::u01(key, index, attempt * n + j) - 1.0;
      x[j] = radius * u * u * u;
      nsq += x[j] * x[j];
    }
    if (nsq < radius * radius) {
      for (std::size_t j = 0; j < n; ++j) x[j] += center[j];
      return x;
    }
  }
  // Unreachable in practice (the cube-law mass outside the ball is a few
  // percent); scale the last attempt inside.
  double s = 0.999 * radius / std::sqrt(norm_sq(x));
  for (std::size_t j = 0; j < n; ++j) x[j] = center[j] + s * x[j];
  return x;
}

enum class DrawStatus : unsigned char { kKept, kHorizon, kOutside, kNondifferentiable };

}  // namespace

GradientCloud build_cloud(const ExtendedFunction& f, const SamplingConfig& config, const Vec& center) {
  if (static_cast<int>(center.size()) != f.dim) throw std::invalid_argument("dimension mismatch: center");
  if (config.radius <= 0.0) throw std::invalid_argument("radius must be positive");
  if (config.max_samples < 1) throw std::invalid_argument("max_samples must be positive");
  if (config.horizon_threshold <= 1.0) throw std::invalid_argument("horizon_threshold must exceed 1");
  if (!f.in_domain(center)) throw std::runtime_error("center outside domain");

  const std::size_t k = static_cast<std::size_t>(config.max_samples);
  const rng::Key key = rng::make_key(config.seed, rng::kStreamCloud);

  std::vector<DrawStatus> status(k);
  std::vector<Vec> grads(k);

  parallel_for(k, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Vec x = cloud_point(center, config.radius, key, i);
      if (!f.in_domain(x)) {
        status[i] = DrawStatus::kOutside;
        continue;
      }
      Vec g;
      try {
        g = f.gradient ? f.gradient(x) : fd_gradient(f, x, config.fd_step);
      } catch (const std::exception&) {
        status[i] = DrawStatus::kNondifferentiable;
        continue;
      }
      if (!all_finite(g)) {
        status[i] = DrawStatus::kNondifferentiable;
        continue;
      }
      double gn = norm(g);
      if (gn > config.horizon_threshold) {
        status[i] = DrawStatus::kHorizon;
        grads[i] = scaled(g, 1.0 / gn);
      } else {
        status[i] = DrawStatus::kKept;
        grads[i] = std::move(g);
      }
    }
  });

  GradientCloud cloud;
  cloud.base_point = center;
  cloud.config = config;
  for (std::size_t i = 0; i < k; ++i) {
    switch (status[i]) {
      case DrawStatus::kKept: cloud.kept_gradients.push_back(std::move(grads[i])); break;
      case DrawStatus::kHorizon: cloud.horizon_directions.push_back(std::move(grads[i])); break;
      case DrawStatus::kOutside: ++cloud.rejected_outside_domain; break;
      case DrawStatus::kNondifferentiable: ++cloud.rejected_nondifferentiable; break;
    }
  }
  if (cloud.kept_gradients.empty() && cloud.horizon_directions.empty())
    throw std::runtime_error("no usable samples");
  return cloud;
}

SubdifferentialEstimate assemble_estimate(const GradientCloud& cloud, const FiniteCone& normals) {
  const int dim = static_cast<int>(cloud.base_point.size());
  if (!normals.generators.empty() && normals.dim != dim)
    throw std::invalid_argument("dimension mismatch: normals");

  std::vector<Vec> cone_gens = cloud.horizon_directions;
  for (const Vec& g : normals.generators) cone_gens.push_back(g);

  SubdifferentialEstimate est;
  est.cloud = cloud;
  est.set = MinkowskiSet(Polytope(dim, cloud.kept_gradients), FiniteCone(dim, cone_gens));

  for (const Vec& g : cloud.kept_gradients) {
    double s = 1.0 / std::sqrt(1.0 + norm_sq(g));
    Vec lifted = scaled(g, s);
    lifted.push_back(-s);
    est.lifted_generators.push_back(std::move(lifted));
  }
  for (const Vec& u : cloud.horizon_directions) {
    Vec lifted = u;
    lifted.push_back(0.0);
    est.lifted_generators.push_back(std::move(lifted));
  }
  for (const Vec& nrm : normals.generators) {
    Vec lifted = normalized(nrm);
    lifted.push_back(0.0);
    est.lifted_generators.push_back(std::move(lifted));
  }
  return est;
}

MinkowskiSet lifted_slice(const SubdifferentialEstimate& estimate) {
  if (estimate.lifted_generators.empty()) throw std::invalid_argument("no lifted generators");
  const std::size_t n1 = estimate.lifted_generators[0].size();
  const int dim = static_cast<int>(n1) - 1;

  std::vector<Vec> hull, cone;
  for (const Vec& g : estimate.lifted_generators) {
    double last = g[n1 - 1];
    if (last < -1e-12) {
      // rescale so the last coordinate is exactly -1
      Vec v(g.begin(), g.end() - 1);
      hull.push_back(scaled(v, -1.0 / last));
    } else {
      Vec v(g.begin(), g.end() - 1);
      if (norm_sq(v) > 0.0) cone.push_back(v);
    }
  }
  if (hull.empty()) throw std::runtime_error("empty slice");
  return MinkowskiSet(Polytope(dim, hull), FiniteCone(dim, cone));
}

StationarityReport test_stationarity(const SubdifferentialEstimate& estimate, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  Vec zero(static_cast<std::size_t>(estimate.set.dim()), 0.0);
  DistanceResult d = distance_to_minkowski(zero, estimate.set);
  StationarityReport rep;
  rep.distance_to_zero = d.distance;
  rep.is_stationary = d.distance <= tol;
  rep.witness = d.witness;
  rep.draws_used = estimate.cloud.config.max_samples;
  return rep;
}

double estimate_distance(const SubdifferentialEstimate& estimate, const Vec& v) {
  return distance_to_minkowski(v, estimate.set).distance;
}

double hausdorff_vs_reference(const SubdifferentialEstimate& estimate,
                              const ReferenceSubdifferential& ref, int probe_dirs) {
  const int dim = estimate.set.dim();
  if (ref.set.dim() != dim) throw std::invalid_argument("dimension mismatch: reference");

  double worst = 0.0;
  for (const Vec& d : direction_grid(dim, probe_dirs)) {
    double a = support_value(estimate.set, d);
    double b = support_value(ref.set, d);
    bool ia = std::isinf(a), ib = std::isinf(b);
    if (ia && ib) continue;
    if (ia != ib) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::fabs(a - b));
  }
  return worst;
}

}  // namespace clarke
