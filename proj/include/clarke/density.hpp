#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clarke/vec.hpp"

namespace clarke {

// Monte-Carlo estimates of mu(Q cap B_delta) / mu(B_delta) on a decreasing
// radius schedule.
struct DensityCurve {
  Vec center;
  std::vector<double> radii;
  std::vector<double> ratios;
  int samples_per_radius = 0;
  std::uint64_t seed = 0;
};

DensityCurve density_curve(const std::function<bool(const Vec&)>& domain, const Vec& center,
                           const std::vector<double>& radii, int samples, std::uint64_t seed);

}  // namespace clarke
