#include "clarke/density.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "clarke/parallel.hpp"
#include "clarke/rng.hpp"

namespace clarke {

DensityCurve density_curve(const std::function<bool(const Vec&)>& domain, const Vec& center,
                           const std::vector<double>& radii, int samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("samples must be at least 1000");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] <= 0.0) throw std::invalid_argument("radii must be positive");
    if (i > 0 && radii[i] >= radii[i - 1]) throw std::invalid_argument("radii must be decreasing");
  }
  const std::size_t n = center.size();

  DensityCurve curve;
  curve.center = center;
  curve.radii = radii;
  curve.samples_per_radius = samples;
  curve.seed = seed;

  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    const double radius = radii[ri];
    const rng::Key key = rng::make_key(seed, rng::kStreamDensityBase + ri);
    std::atomic<long> hits{0};
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t lo, std::size_t hi) {
      long local = 0;
      Vec x(n, 0.0), d(n, 0.0);
      for (std::size_t i = lo; i < hi; ++i) {
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
        double s = radius * std::pow(u, 1.0 / static_cast<double>(n)) / std::sqrt(nsq);
        for (std::size_t j = 0; j < n; ++j) x[j] = center[j] + s * d[j];
        if (domain(x)) ++local;
      }
      hits += local;
    });
    curve.ratios.push_back(static_cast<double>(hits.load()) / static_cast<double>(samples));
  }
  return curve;
}

}  // namespace clarke
