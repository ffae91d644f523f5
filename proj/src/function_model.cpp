#include "clarke/function_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clarke {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eval_or_throw(const ExtendedFunction& f, const Vec& x) {
  double v = f.value(x);
  if (std::isnan(v)) throw std::runtime_error("value oracle returned NaN");
  return v;
}

}  // namespace

Vec fd_gradient(const ExtendedFunction& f, const Vec& x, double h) {
  if (h <= 0.0) throw std::invalid_argument("step must be positive");
  if (!f.in_domain(x)) throw std::runtime_error("stencil outside domain");
  const std::size_t n = x.size();
  Vec g(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    Vec xp = x, xm = x;
    double estimates[2];
    double fwd = 0.0, bwd = 0.0;
    for (int level = 0; level < 2; ++level) {
      const double step = level == 0 ? h : 0.5 * h;
      xp[j] = x[j] + step;
      xm[j] = x[j] - step;
      if (!f.in_domain(xp) || !f.in_domain(xm)) throw std::runtime_error("stencil outside domain");
      double vp = eval_or_throw(f, xp);
      double vm = eval_or_throw(f, xm);
      estimates[level] = (vp - vm) / (2.0 * step);
      if (level == 0) {
        double v0 = eval_or_throw(f, x);
        fwd = (vp - v0) / step;
        bwd = (v0 - vm) / step;
      }
    }
    const double scale = 1.0 + std::fabs(estimates[1]);
    if (std::fabs(estimates[0] - estimates[1]) > kFdConsistencyTol * scale)
      throw std::runtime_error("nondifferentiable point");
    if (std::fabs(fwd - bwd) > 10.0 * kFdConsistencyTol * scale)
      throw std::runtime_error("nondifferentiable point");
    g[j] = estimates[1];
  }
  return g;
}

double cantor_value(double x, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double value = 0.0;
  double w = 0.5;
  double rem = x;
  for (int d = 0; d < depth; ++d) {
    rem *= 3.0;
    int digit = static_cast<int>(rem);
    if (digit > 2) digit = 2;
    rem -= digit;
    if (digit == 1) {
      value += w;  // digits after the first 1 are dropped
      break;
    }
    if (digit == 2) value += w;
    w *= 0.5;
  }
  return value;
}

namespace {

// True when the ternary expansion shows a 1 within `depth` digits, i.e. x
// lies in one of the removed middle-third intervals (up to 3^-depth).
bool in_removed_interval(double x, int depth) {
  double rem = x;
  for (int d = 0; d < depth; ++d) {
    rem *= 3.0;
    int digit = static_cast<int>(rem);
    if (digit > 2) digit = 2;
    rem -= digit;
    if (digit == 1) return true;
  }
  return false;
}

CatalogEntry make_abs() {
  CatalogEntry e;
  e.name = "abs";
  e.fn.dim = 1;
  e.fn.value = [](const Vec& x) { return std::fabs(x[0]); };
  e.fn.in_domain = [](const Vec&) { return true; };
  e.fn.gradient = [](const Vec& x) -> Vec {
    if (x[0] == 0.0) throw std::runtime_error("nondifferentiable point");
    return Vec{x[0] > 0.0 ? 1.0 : -1.0};
  };
  e.references.push_back({Vec{0.0},
                          MinkowskiSet(Polytope(1, {Vec{-1.0}, Vec{1.0}}), FiniteCone(1, {})),
                          "interval [-1,1]: convex hull of the two slopes at the kink"});
  e.notes = "locally Lipschitz; gradients alone generate the subdifferential";
  return e;
}

CatalogEntry make_quartic_root() {
  CatalogEntry e;
  e.name = "quartic_root";
  e.fn.dim = 2;
  e.fn.value = [](const Vec& p) { return std::pow(p[0] * p[0] * p[0] * p[0] + p[1] * p[1], 0.25); };
  e.fn.in_domain = [](const Vec&) { return true; };
  e.fn.gradient = [](const Vec& p) -> Vec {
    double base = p[0] * p[0] * p[0] * p[0] + p[1] * p[1];
    if (base == 0.0) throw std::runtime_error("nondifferentiable point");
    double s = std::pow(base, -0.75);
    return Vec{p[0] * p[0] * p[0] * s, 0.5 * p[1] * s};
  };
  e.references.push_back(
      {Vec{0.0, 0.0},
       MinkowskiSet(Polytope(2, {Vec{-1.0, 0.0}, Vec{1.0, 0.0}}),
                    FiniteCone(2, {Vec{0.0, 1.0}, Vec{0.0, -1.0}})),
       "[-1,1] x R: slope limits along the x-axis plus the vertical directions of gradient blow-up"});
  e.notes = "continuous with unbounded gradient; the vertical recession directions are essential";
  return e;
}

CatalogEntry make_parabola_fraction() {
  CatalogEntry e;
  e.name = "parabola_fraction";
  e.fn.dim = 2;
  e.fn.value = [](const Vec& p) {
    if (p[0] > 0.0) return p[1] * p[1] / (2.0 * p[0]);
    if (p[0] == 0.0 && p[1] == 0.0) return 0.0;
    return kInf;
  };
  e.fn.in_domain = [](const Vec& p) { return p[0] > 0.0 || (p[0] == 0.0 && p[1] == 0.0); };
  e.fn.gradient = [](const Vec& p) -> Vec {
    if (p[0] <= 0.0) throw std::runtime_error("nondifferentiable point");
    double u = p[1] / p[0];
    return Vec{-0.5 * u * u, u};
  };
  e.fn.normal_cone = [](const Vec& p) -> FiniteCone {
    if (p[0] == 0.0 && p[1] == 0.0) return FiniteCone(2, {Vec{-1.0, 0.0}});
    return FiniteCone(2, {});
  };
  e.fn.meta.continuous_on_domain = false;  // discontinuous at the origin
  e.membership_references.push_back(
      {Vec{0.0, 0.0},
       [](const Vec& v) { return v[0] <= -0.5 * v[1] * v[1]; },
       "subdifferential at the origin: the region below the parabola v1 = -v2^2/2"});
  e.notes = "convex, lower semicontinuous, discontinuous at the origin yet vertically continuous";
  return e;
}

CatalogEntry make_cantor() {
  CatalogEntry e;
  e.name = "cantor";
  e.fn.dim = 1;
  e.fn.value = [](const Vec& x) {
    if (x[0] < 0.0 || x[0] > 1.0) return kInf;
    return cantor_value(x[0], 60);
  };
  e.fn.in_domain = [](const Vec& x) { return x[0] >= 0.0 && x[0] <= 1.0; };
  e.fn.gradient = [](const Vec& x) -> Vec {
    if (x[0] <= 0.0 || x[0] >= 1.0) throw std::runtime_error("nondifferentiable point");
    if (!in_removed_interval(x[0], 45)) throw std::runtime_error("nondifferentiable point");
    return Vec{0.0};
  };
  e.fn.meta.stratifiable = false;
  e.notes =
      "negative case: the derivative vanishes on a full-measure set, so gradient sampling "
      "returns {0}, strictly smaller than the Clarke subdifferential at Cantor-set points";
  return e;
}

CatalogEntry make_step_jump() {
  CatalogEntry e;
  e.name = "step_jump";
  e.fn.dim = 1;
  e.fn.value = [](const Vec& x) { return x[0] <= 0.0 ? x[0] : x[0] + 1.0; };
  e.fn.in_domain = [](const Vec&) { return true; };
  e.fn.gradient = [](const Vec& x) -> Vec {
    if (x[0] == 0.0) throw std::runtime_error("nondifferentiable point");
    return Vec{1.0};
  };
  e.fn.meta.vertically_continuous = false;
  e.fn.meta.continuous_on_domain = false;
  e.notes =
      "negative case: every sampled gradient equals 1, so the estimate is {1}; the Clarke "
      "subdifferential at 0 differs because of the jump, and no reference set is stored";
  return e;
}

CatalogEntry make_cusp_indicator() {
  CatalogEntry e;
  e.name = "cusp_indicator";
  e.fn.dim = 2;
  auto inside = [](const Vec& p) { return p[0] >= 0.0 && std::fabs(p[1]) <= p[0] * p[0]; };
  e.fn.value = [inside](const Vec& p) { return inside(p) ? 0.0 : kInf; };
  e.fn.in_domain = inside;
  e.fn.gradient = [inside](const Vec& p) -> Vec {
    if (!inside(p) || p[0] <= 0.0 || std::fabs(p[1]) >= p[0] * p[0])
      throw std::runtime_error("nondifferentiable point");
    return Vec{0.0, 0.0};
  };
  e.fn.meta.directionally_lipschitzian = false;  // the domain pinches at the origin
  e.notes = "domain with vanishing density at the origin; used by the density probe";
  return e;
}

CatalogEntry make_halfplane_smooth() {
  CatalogEntry e;
  e.name = "halfplane_smooth";
  e.fn.dim = 2;
  e.fn.value = [](const Vec& p) { return p[0] >= 0.0 ? std::sin(p[0]) + p[1] * p[1] : kInf; };
  e.fn.in_domain = [](const Vec& p) { return p[0] >= 0.0; };
  e.fn.gradient = [](const Vec& p) -> Vec {
    if (p[0] <= 0.0) throw std::runtime_error("nondifferentiable point");
    return Vec{std::cos(p[0]), 2.0 * p[1]};
  };
  e.fn.normal_cone = [](const Vec& p) -> FiniteCone {
    if (p[0] <= 0.0) return FiniteCone(2, {Vec{-1.0, 0.0}});
    return FiniteCone(2, {});
  };
  e.references.push_back(
      {Vec{0.0, 0.0},
       MinkowskiSet(Polytope(2, {Vec{1.0, 0.0}}), FiniteCone(2, {Vec{-1.0, 0.0}})),
       "gradient limit (1,0) plus the domain normal cone at the boundary"});
  e.notes = "smooth objective constrained to a half-plane; the normal-cone term is decisive";
  return e;
}

CatalogEntry make_linear() {
  CatalogEntry e;
  e.name = "linear";
  e.fn.dim = 1;
  e.fn.value = [](const Vec& x) { return x[0]; };
  e.fn.in_domain = [](const Vec&) { return true; };
  e.fn.gradient = [](const Vec&) { return Vec{1.0}; };
  e.references.push_back({Vec{0.0}, MinkowskiSet(Polytope(1, {Vec{1.0}}), FiniteCone(1, {})),
                          "singleton {1}: the function is smooth"});
  e.notes = "smooth control case for false-positive checks of the stationarity test";
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make_abs());
    v.push_back(make_quartic_root());
    v.push_back(make_parabola_fraction());
    v.push_back(make_cantor());
    v.push_back(make_step_jump());
    v.push_back(make_cusp_indicator());
    v.push_back(make_halfplane_smooth());
    v.push_back(make_linear());
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw std::runtime_error("unknown function: " + name);
}

}  // namespace clarke
