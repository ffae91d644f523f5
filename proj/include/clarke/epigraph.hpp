#pragma once

#include <string>
#include <vector>

#include "clarke/function_model.hpp"
#include "clarke/vec.hpp"

namespace clarke {

struct EpigraphPoint {
  Vec x;
  double r = 0.0;
};

// Approximate nearest point of epi f to y, by grid search over the spatial
// part (the best height at fixed x is max(f(x), y.r)) followed by
// coordinate bisection shrinking the cell. Throws "no epigraph points in
// box" when the search box misses the domain entirely.
EpigraphPoint project_epigraph(const ExtendedFunction& f, const EpigraphPoint& y, double search_box,
                               int grid);

struct TraceRecord {
  double t = 0.0;
  EpigraphPoint y;
  EpigraphPoint x;
  Vec proximal_normal;  // (y - x)/t in R^{n+1}
  double residual = 0.0;  // | (y-x)/t - v_bar |
  double dist_from_base = 0.0;
};

struct AccessibilityScenario {
  std::string name;
  ExtendedFunction fn;
  Vec base_x;
  double base_r = 0.0;
  Vec v_bar;  // in R^{n+1}
  Vec w_bar;  // in R^{n+1}
  std::vector<double> t_schedule;
  double search_box_factor = 4.0;
  int grid = 401;
};

struct AccessibilityTrace {
  AccessibilityScenario scenario;
  std::vector<TraceRecord> records;
};

// Walks y(t) = base + t(v_bar + t w_bar) down the schedule, projecting onto
// the epigraph and recording the proximal normals (y(t)-x(t))/t and their
// residuals against v_bar.
AccessibilityTrace run_accessibility(const AccessibilityScenario& scenario);

// The three bundled scenarios: "abs" (boundary normal of the kink),
// "halfspace" (zero function; residuals vanish identically), and "quartic"
// (horizontal normal from the gradient blow-up directions).
std::vector<AccessibilityScenario> shipped_scenarios();
const AccessibilityScenario& shipped_scenario(const std::string& name);

// Least-squares slope of log(residual) against log(t), ignoring residuals
// below `floor`.
double loglog_slope(const std::vector<double>& t, const std::vector<double>& r, double floor = 1e-12);

}  // namespace clarke
