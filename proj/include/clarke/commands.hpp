#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clarke/report.hpp"

namespace clarke {

// Report builders behind the CLI subcommands. Every builder echoes its full
// input set (including defaulted values) so a report can be reproduced
// bit-exactly from itself.

struct EstimateArgs {
  std::string fn;
  Vec center;
  double radius = 0.01;
  int samples = 1000;
  std::uint64_t seed = 0;
  double horizon_threshold = 1e3;
  double fd_step = kFdDefaultStep;
  double tol = 0.05;  // reference-check threshold
  int probe_dirs = 64;
  std::optional<std::vector<Vec>> normals_override;
  bool suppress_normals = false;
};

Json cmd_estimate(const EstimateArgs& args);
Json cmd_stationarity(const EstimateArgs& args);

struct DistanceArgs {
  EstimateArgs est;
  Vec v;
};
Json cmd_distance(const DistanceArgs& args);

struct AccessArgs {
  std::string scenario;
  std::optional<double> t0;
  std::optional<double> ratio;
  std::optional<int> steps;
  std::optional<int> grid;
};
Json cmd_access(const AccessArgs& args);

struct DensityArgs {
  std::string fn;
  Vec center;
  std::vector<double> radii;
  int samples = 100000;
  std::uint64_t seed = 0;
};
Json cmd_density(const DensityArgs& args);

Json cmd_catalog();

// The point cloud a command would export as CSV (estimate: kept gradients).
std::string estimate_csv(const EstimateArgs& args);

}  // namespace clarke
