#include "clarke/epigraph.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "clarke/parallel.hpp"

namespace clarke {

namespace {

double epi_cost(const ExtendedFunction& f, const Vec& x, const EpigraphPoint& y, double& height) {
  double v = f.value(x);
  if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
  height = std::max(v, y.r);
  double c = (height - y.r) * (height - y.r);
  for (std::size_t j = 0; j < x.size(); ++j) {
    double d = x[j] - y.x[j];
    c += d * d;
  }
  return c;
}

}  // namespace

EpigraphPoint project_epigraph(const ExtendedFunction& f, const EpigraphPoint& y, double search_box,
                               int grid) {
  if (search_box <= 0.0) throw std::invalid_argument("search box must be positive");
  if (grid < 3) throw std::invalid_argument("grid too small");
  const std::size_t n = y.x.size();

  // coarse pass over the full box
  Vec best_x;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_height = 0.0;
  std::vector<std::size_t> counter(n, 0);
  const double spacing = 2.0 * search_box / static_cast<double>(grid - 1);
  bool done = false;
  Vec x(n, 0.0);
  while (!done) {
    for (std::size_t j = 0; j < n; ++j)
      x[j] = y.x[j] - search_box + spacing * static_cast<double>(counter[j]);
    double h = 0.0;
    double c = epi_cost(f, x, y, h);
    if (c < best_cost) {
      best_cost = c;
      best_x = x;
      best_height = h;
    }
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++counter[j] < static_cast<std::size_t>(grid)) break;
      counter[j] = 0;
    }
    done = j == n;
  }
  if (!std::isfinite(best_cost)) throw std::runtime_error("no epigraph points in box");

  // coordinate bisection around the best cell
  double cell = spacing;
  for (int it = 0; it < 30; ++it) {
    for (std::size_t j = 0; j < n; ++j) {
      for (double s : {-1.0, 1.0}) {
        Vec cand = best_x;
        cand[j] += s * cell;
        double h = 0.0;
        double c = epi_cost(f, cand, y, h);
        if (c < best_cost) {
          best_cost = c;
          best_x = cand;
          best_height = h;
        }
      }
    }
    cell *= 0.5;
  }
  return EpigraphPoint{best_x, best_height};
}

AccessibilityTrace run_accessibility(const AccessibilityScenario& scenario) {
  const std::size_t n = scenario.base_x.size();
  if (scenario.v_bar.size() != n + 1 || scenario.w_bar.size() != n + 1)
    throw std::invalid_argument("v_bar/w_bar must live in R^{n+1}");
  for (std::size_t i = 1; i < scenario.t_schedule.size(); ++i)
    if (scenario.t_schedule[i] >= scenario.t_schedule[i - 1])
      throw std::invalid_argument("t_schedule must be strictly decreasing");

  AccessibilityTrace trace;
  trace.scenario = scenario;
  trace.records.resize(scenario.t_schedule.size());

  const double vb = norm(scenario.v_bar), wb = norm(scenario.w_bar);
  parallel_for(scenario.t_schedule.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double t = scenario.t_schedule[i];
      EpigraphPoint y;
      y.x.assign(n, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        y.x[j] = scenario.base_x[j] + t * (scenario.v_bar[j] + t * scenario.w_bar[j]);
      y.r = scenario.base_r + t * (scenario.v_bar[n] + t * scenario.w_bar[n]);

      double box = scenario.search_box_factor * t * (vb + wb);
      EpigraphPoint x = project_epigraph(scenario.fn, y, box, scenario.grid);

      TraceRecord rec;
      rec.t = t;
      rec.y = y;
      rec.x = x;
      rec.proximal_normal.assign(n + 1, 0.0);
      for (std::size_t j = 0; j < n; ++j) rec.proximal_normal[j] = (y.x[j] - x.x[j]) / t;
      rec.proximal_normal[n] = (y.r - x.r) / t;
      rec.residual = dist(rec.proximal_normal, scenario.v_bar);
      double d2 = (x.r - scenario.base_r) * (x.r - scenario.base_r);
      for (std::size_t j = 0; j < n; ++j) {
        double d = x.x[j] - scenario.base_x[j];
        d2 += d * d;
      }
      rec.dist_from_base = std::sqrt(d2);
      trace.records[i] = std::move(rec);
    }
  });
  return trace;
}

namespace {

std::vector<double> geometric_schedule(double t0, double ratio, int steps) {
  std::vector<double> t;
  double v = t0;
  for (int i = 0; i < steps; ++i) {
    t.push_back(v);
    v *= ratio;
  }
  return t;
}

const double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

std::vector<AccessibilityScenario> shipped_scenarios() {
  std::vector<AccessibilityScenario> scenarios;

  {
    AccessibilityScenario s;
    s.name = "abs";
    s.fn = catalog_entry("abs").fn;
    s.base_x = Vec{0.0};
    s.base_r = 0.0;
    // boundary ray of the normal cone at the kink; w_bar tips it outside
    s.v_bar = Vec{kInvSqrt2, -kInvSqrt2};
    s.w_bar = Vec{1.0, 0.0};
    s.t_schedule = geometric_schedule(0.1, 0.5, 8);
    scenarios.push_back(std::move(s));
  }
  {
    AccessibilityScenario s;
    s.name = "halfspace";
    ExtendedFunction zero;
    zero.dim = 1;
    zero.value = [](const Vec&) { return 0.0; };
    zero.in_domain = [](const Vec&) { return true; };
    zero.gradient = [](const Vec&) { return Vec{0.0}; };
    s.fn = std::move(zero);
    s.base_x = Vec{0.0};
    s.base_r = 0.0;
    s.v_bar = Vec{0.0, -1.0};
    // the normal line is {(0,s)}; with w_bar = 0 the proximal normal equals
    // v_bar at every t and the residuals vanish identically
    s.w_bar = Vec{0.0, 0.0};
    s.t_schedule = geometric_schedule(0.1, 0.5, 8);
    scenarios.push_back(std::move(s));
  }
  {
    AccessibilityScenario s;
    s.name = "quartic";
    s.fn = catalog_entry("quartic_root").fn;
    s.base_x = Vec{0.0, 0.0};
    s.base_r = 0.0;
    // horizontal normal direction coming from the gradient blow-up rays
    s.v_bar = Vec{0.0, 1.0, 0.0};
    s.w_bar = Vec{0.0, 0.0, -1.0};
    s.t_schedule = geometric_schedule(0.1, 0.5, 8);
    s.grid = 801;
    scenarios.push_back(std::move(s));
  }
  return scenarios;
}

const AccessibilityScenario& shipped_scenario(const std::string& name) {
  static const std::vector<AccessibilityScenario> all = shipped_scenarios();
  for (const AccessibilityScenario& s : all)
    if (s.name == name) return s;
  throw std::runtime_error("unknown scenario: " + name);
}

double loglog_slope(const std::vector<double>& t, const std::vector<double>& r, double floor) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (r[i] < floor) continue;
    double x = std::log(t[i]), y = std::log(r[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  double denom = static_cast<double>(m) * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

}  // namespace clarke
