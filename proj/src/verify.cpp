#include "clarke/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "clarke/commands.hpp"
#include "clarke/density.hpp"
#include "clarke/epigraph.hpp"
#include "clarke/oracles.hpp"
#include "clarke/rng.hpp"
#include "clarke/sampler.hpp"

namespace clarke {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SubdifferentialEstimate make_estimate(const std::string& fn_name, const Vec& center, double radius,
                                      int samples, std::uint64_t seed, bool with_normals = true,
                                      double threshold = 1e3) {
  const CatalogEntry& entry = catalog_entry(fn_name);
  SamplingConfig cfg;
  cfg.radius = radius;
  cfg.max_samples = samples;
  cfg.seed = seed;
  cfg.horizon_threshold = threshold;
  GradientCloud cloud = build_cloud(entry.fn, cfg, center);
  FiniteCone normals(entry.fn.dim, {});
  if (with_normals && entry.fn.normal_cone) normals = entry.fn.normal_cone(center);
  return assemble_estimate(cloud, normals);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// --- criterion 1: quartic_root reproduction --------------------------------

CriterionResult criterion_quartic() {
  CriterionResult c{1, "quartic-reproduction", true, "", Json::object()};
  auto t0 = Clock::now();
  Json seeds = Json::array();
  double worst_support_gap = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SubdifferentialEstimate est = make_estimate("quartic_root", {0.0, 0.0}, 0.01, 4000, seed);
    double sp = support_value(est.set, {1.0, 0.0});
    double sm = support_value(est.set, {-1.0, 0.0});
    bool inf_up = std::isinf(support_value(est.set, {0.0, 1.0}));
    bool inf_dn = std::isinf(support_value(est.set, {0.0, -1.0}));
    bool hor_up = false, hor_dn = false;
    for (const Vec& h : est.cloud.horizon_directions) {
      if (dist(h, {0.0, 1.0}) <= 0.05) hor_up = true;
      if (dist(h, {0.0, -1.0}) <= 0.05) hor_dn = true;
    }
    bool ok = std::isfinite(sp) && std::isfinite(sm) && std::fabs(sp - 1.0) <= 0.05 &&
              std::fabs(sm - 1.0) <= 0.05 && inf_up && inf_dn && hor_up && hor_dn;
    c.pass = c.pass && ok;
    worst_support_gap = std::max({worst_support_gap, std::fabs(sp - 1.0), std::fabs(sm - 1.0)});
    Json s;
    s["seed"] = seed;
    s["support_plus_x"] = sp;
    s["support_minus_x"] = sm;
    s["support_up_infinite"] = inf_up;
    s["support_down_infinite"] = inf_dn;
    s["horizon_up_present"] = hor_up;
    s["horizon_down_present"] = hor_dn;
    s["pass"] = ok;
    seeds.push_back(s);
  }
  bool runtime_ok = seconds_since(t0) < 5.0;
  c.pass = c.pass && runtime_ok;
  c.details["seeds"] = seeds;
  c.details["runtime_under_5s"] = runtime_ok;
  c.summary = "worst axis-support gap " + fmt(worst_support_gap) + ", 10/10 seeds, runtime cap " +
              (runtime_ok ? "met" : "MISSED");
  return c;
}

// --- criterion 2: abs reproduction ------------------------------------------

CriterionResult criterion_abs() {
  CriterionResult c{2, "abs-reproduction", true, "", Json::object()};
  auto t0 = Clock::now();
  const ReferenceSubdifferential& ref = catalog_entry("abs").references.front();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SubdifferentialEstimate est = make_estimate("abs", {0.0}, 0.01, 500, seed);
    double h = hausdorff_vs_reference(est, ref, 64);
    worst = std::max(worst, h);
  }
  bool runtime_ok = seconds_since(t0) < 1.0;
  c.pass = worst <= 0.01 && runtime_ok;
  c.details["worst_hausdorff"] = worst;
  c.details["runtime_under_1s"] = runtime_ok;
  c.summary = "worst hausdorff " + fmt(worst) + ", runtime cap " + (runtime_ok ? "met" : "MISSED");
  return c;
}

// --- criterion 3: no false positive -----------------------------------------

CriterionResult criterion_no_false_positive() {
  CriterionResult c{3, "no-false-positive", true, "", Json::object()};
  double lo = 1e9, hi = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int k : {100, 1000}) {
      SubdifferentialEstimate est = make_estimate("linear", {0.0}, 0.1, k, seed);
      double d = test_stationarity(est, 0.05).distance_to_zero;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      c.pass = c.pass && d >= 0.95 && d <= 1.05;
    }
  }
  c.details["min_distance"] = lo;
  c.details["max_distance"] = hi;
  c.summary = "distance range [" + fmt(lo) + ", " + fmt(hi) + "]";
  return c;
}

// --- criterion 4: constrained stationarity ----------------------------------

CriterionResult criterion_constrained() {
  CriterionResult c{4, "constrained-stationarity", true, "", Json::object()};
  double worst_with = 0.0, best_without = 1e9;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SubdifferentialEstimate with_n = make_estimate("halfplane_smooth", {0.0, 0.0}, 0.01, 1000, seed, true);
    StationarityReport rw = test_stationarity(with_n, 0.05);
    SubdifferentialEstimate without_n =
        make_estimate("halfplane_smooth", {0.0, 0.0}, 0.01, 1000, seed, false);
    StationarityReport ro = test_stationarity(without_n, 0.05);
    c.pass = c.pass && rw.is_stationary && !ro.is_stationary && ro.distance_to_zero >= 0.9;
    worst_with = std::max(worst_with, rw.distance_to_zero);
    best_without = std::min(best_without, ro.distance_to_zero);
  }
  c.details["max_distance_with_normals"] = worst_with;
  c.details["min_distance_without_normals"] = best_without;
  c.summary = "with normals <= " + fmt(worst_with) + ", without >= " + fmt(best_without);
  return c;
}

// --- criterion 5: convex formula via parabola_fraction -----------------------

double dist_to_parabola_curve(const Vec& v) {
  // curve (-t^2/2, t); coarse scan plus shrinking local refinement
  double best_t = 0.0, best = 1e300;
  for (int i = 0; i <= 800; ++i) {
    double t = -4.0 + 8.0 * i / 800.0;
    double dx = v[0] + 0.5 * t * t, dy = v[1] - t;
    double d2 = dx * dx + dy * dy;
    if (d2 < best) {
      best = d2;
      best_t = t;
    }
  }
  double step = 8.0 / 800.0;
  for (int it = 0; it < 40; ++it) {
    for (double s : {-step, step}) {
      double t = best_t + s;
      double dx = v[0] + 0.5 * t * t, dy = v[1] - t;
      double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_t = t;
      }
    }
    step *= 0.5;
  }
  return std::sqrt(best);
}

CriterionResult criterion_parabola() {
  CriterionResult c{5, "convex-formula-parabola", true, "", Json::object()};
  SubdifferentialEstimate est = make_estimate("parabola_fraction", {0.0, 0.0}, 0.01, 8000, 0);
  int agree = 0, total = 0, outside_band = 0;
  double worst_band = 0.0;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) {
      Vec v{-3.0 + 6.0 * i / 20.0, -3.0 + 6.0 * j / 20.0};
      bool analytic = v[0] <= -0.5 * v[1] * v[1];
      bool estimated = contains(v, est.set, 0.05);
      ++total;
      if (analytic == estimated) {
        ++agree;
      } else {
        double band = dist_to_parabola_curve(v);
        worst_band = std::max(worst_band, band);
        if (band > 0.1) ++outside_band;
      }
    }
  }
  double rate = static_cast<double>(agree) / total;
  c.pass = rate >= 0.95 && outside_band == 0;
  c.details["agreement_rate"] = rate;
  c.details["disagreements"] = total - agree;
  c.details["disagreements_outside_band"] = outside_band;
  c.details["worst_disagreement_band_distance"] = worst_band;
  c.summary = "agreement " + fmt(100.0 * rate) + "%, all mismatches within " + fmt(worst_band) +
              " of the boundary";
  return c;
}

// --- criterion 6: documented negative cases ---------------------------------

CriterionResult criterion_negative_cases() {
  CriterionResult c{6, "negative-cases", true, "", Json::object()};
  // "random" base point drawn from the fixed-seed counter stream, echoed
  double base = 0.1 + 0.8 * rng::u01(rng::make_key(0, 0xCA7), 0, 0);
  SubdifferentialEstimate cantor = make_estimate("cantor", {base}, 0.02, 500, 0);
  double worst0 = 0.0;
  for (const Vec& g : cantor.set.hull.vertices) worst0 = std::max(worst0, std::fabs(g[0]));
  bool cantor_ok = worst0 <= 1e-6 && cantor.set.cone.generators.empty();

  SubdifferentialEstimate step = make_estimate("step_jump", {0.0}, 0.01, 500, 0);
  double worst1 = 0.0;
  for (const Vec& g : step.set.hull.vertices) worst1 = std::max(worst1, std::fabs(g[0] - 1.0));
  bool step_ok = !step.set.hull.vertices.empty() && worst1 <= 1e-9 && step.set.cone.generators.empty();

  c.pass = cantor_ok && step_ok;
  c.details["cantor_base_point"] = base;
  c.details["cantor_max_abs_gradient"] = worst0;
  c.details["step_jump_max_gap_from_one"] = worst1;
  c.summary = "cantor hull within " + fmt(worst0) + " of {0}, step_jump within " + fmt(worst1) +
              " of {1}";
  return c;
}

// --- criterion 7: convex-kernel oracle equivalence ---------------------------

CriterionResult criterion_kernel_oracles() {
  CriterionResult c{7, "convex-kernel-oracles", true, "", Json::object()};
  rng::Key key = rng::make_key(7, 0x0913);

  double worst_dev = 0.0;
  for (int inst = 0; inst < 200; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, inst, 0) % 2);
    int npts = 3 + static_cast<int>(rng::bits(key, inst, 1) % 4);
    std::vector<Vec> pts;
    for (int p = 0; p < npts; ++p) {
      Vec v(static_cast<std::size_t>(dim), 0.0);
      for (int d = 0; d < dim; ++d)
        v[static_cast<std::size_t>(d)] =
            -2.0 + 4.0 * rng::u01(key, inst, 16 + static_cast<std::uint64_t>(p * 8 + d));
      pts.push_back(v);
    }
    Vec mine = min_norm_point(pts).point;
    Vec ref = oracles::min_norm_bruteforce(pts);
    worst_dev = std::max(worst_dev, dist(mine, ref));
  }
  bool mnp_ok = worst_dev <= 1e-6;

  int agreements = 0;
  for (int inst = 0; inst < 200; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, 1000 + inst, 0) % 3);
    int ngen = 2 + static_cast<int>(rng::bits(key, 1000 + inst, 1) % 5);
    std::vector<Vec> gens;
    for (int p = 0; p < ngen; ++p) {
      Vec v(static_cast<std::size_t>(dim), 0.0);
      double nsq = 0.0;
      for (int d = 0; d < dim; d += 2) {
        double z0, z1;
        rng::gaussian_pair(key, 1000 + static_cast<std::uint64_t>(inst),
                           8 + static_cast<std::uint64_t>(p * 4 + d / 2), z0, z1);
        v[static_cast<std::size_t>(d)] = z0;
        if (d + 1 < dim) v[static_cast<std::size_t>(d + 1)] = z1;
      }
      nsq = norm_sq(v);
      if (nsq == 0.0) v[0] = 1.0;
      gens.push_back(normalized(v));
    }
    bool mine = cone_is_pointed(FiniteCone(dim, gens));
    bool ref = !oracles::lp_zero_in_convex_hull(gens);
    if (mine == ref) ++agreements;
  }
  bool lp_ok = agreements == 200;

  c.pass = mnp_ok && lp_ok;
  c.details["min_norm_worst_deviation"] = worst_dev;
  c.details["pointedness_agreements"] = agreements;
  c.summary = "min-norm worst dev " + fmt(worst_dev) + ", pointedness " +
              std::to_string(agreements) + "/200";
  return c;
}

// --- criterion 8: boundary rays regenerate the cone --------------------------

CriterionResult criterion_boundary_cones() {
  CriterionResult c{8, "boundary-generates-cone", true, "", Json::object()};
  rng::Key key = rng::make_key(8, 0x0914);
  int passed = 0;
  for (int inst = 0; inst < 50; ++inst) {
    int dim = inst % 2 == 0 ? 2 : 3;
    int ngen = 3 + static_cast<int>(rng::bits(key, inst, 0) % 6);
    // axis plus bounded tangential noise keeps the cone pointed; rank is
    // checked and degenerate draws are re-rolled deterministically
    for (std::uint64_t attempt = 0;; ++attempt) {
      Vec axis(static_cast<std::size_t>(dim), 0.0);
      for (int d = 0; d < dim; d += 2) {
        double z0, z1;
        rng::gaussian_pair(key, inst, 100 * attempt + 1 + static_cast<std::uint64_t>(d / 2), z0, z1);
        axis[static_cast<std::size_t>(d)] = z0;
        if (d + 1 < dim) axis[static_cast<std::size_t>(d + 1)] = z1;
      }
      if (norm(axis) < 1e-9) continue;
      axis = normalized(axis);
      std::vector<Vec> gens;
      for (int p = 0; p < ngen; ++p) {
        Vec noise(static_cast<std::size_t>(dim), 0.0);
        for (int d = 0; d < dim; d += 2) {
          double z0, z1;
          rng::gaussian_pair(key, inst,
                             100 * attempt + 10 + static_cast<std::uint64_t>(p * 4 + d / 2), z0, z1);
          noise[static_cast<std::size_t>(d)] = z0;
          if (d + 1 < dim) noise[static_cast<std::size_t>(d + 1)] = z1;
        }
        double along = dot(noise, axis);
        Vec tangential = sub(noise, scaled(axis, along));
        double tn = norm(tangential);
        if (tn > 1.5) tangential = scaled(tangential, 1.5 / tn);
        gens.push_back(normalized(add(axis, tangential)));
      }
      // full-dimensionality: rank of the generator matrix must equal dim
      std::vector<Vec> gram(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0.0));
      for (const Vec& g : gens)
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b)
            gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                g[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
      Vec sol;
      bool full_rank = solve_dense(gram, Vec(static_cast<std::size_t>(dim), 1.0), sol);
      if (!full_rank) continue;
      FiniteCone cone(dim, gens);
      if (boundary_generates_cone_check(cone, 16, static_cast<std::uint64_t>(inst), 1e-7)) ++passed;
      break;
    }
  }
  c.pass = passed == 50;
  c.details["passed"] = passed;
  c.summary = std::to_string(passed) + "/50 random pointed cones";
  return c;
}

// --- criterion 9: accessibility traces --------------------------------------

CriterionResult criterion_accessibility() {
  CriterionResult c{9, "accessibility-traces", true, "", Json::object()};
  Json per = Json::array();
  for (const AccessibilityScenario& scenario : shipped_scenarios()) {
    AccessibilityTrace trace = run_accessibility(scenario);
    std::vector<double> ts, rs;
    double final_res = 0.0, max_res = 0.0;
    for (const TraceRecord& r : trace.records) {
      ts.push_back(r.t);
      rs.push_back(r.residual);
      final_res = r.residual;
      max_res = std::max(max_res, r.residual);
    }
    bool all_tiny = max_res < 1e-12;
    double slope = loglog_slope(ts, rs);
    // A slope fit on residuals that are identically zero is meaningless;
    // such a scenario passes the trend clause by virtue of being exact.
    bool slope_ok = all_tiny || slope > 0.0;
    bool final_ok = final_res <= 0.1;
    bool ok = slope_ok && final_ok;
    if (scenario.name == "halfspace") ok = ok && max_res <= 1e-8;
    c.pass = c.pass && ok;
    Json s;
    s["scenario"] = scenario.name;
    s["loglog_slope"] = slope;
    s["final_residual"] = final_res;
    s["max_residual"] = max_res;
    s["pass"] = ok;
    per.push_back(s);
  }
  c.details["scenarios"] = per;
  std::ostringstream os;
  for (const auto& s : c.details["scenarios"])
    os << s["scenario"].get<std::string>() << " final " << fmt(s["final_residual"].get<double>())
       << "; ";
  c.summary = os.str();
  return c;
}

// --- criterion 10: density probe ---------------------------------------------

CriterionResult criterion_density() {
  CriterionResult c{10, "density-probe", true, "", Json::object()};
  auto halfplane = [](const Vec& p) { return p[0] >= 0.0; };
  auto quadrant = [](const Vec& p) { return p[0] >= 0.0 && p[1] >= 0.0; };
  auto epi_abs = [](const Vec& p) { return p[1] >= std::fabs(p[0]); };
  const auto& cusp = catalog_entry("cusp_indicator").fn.in_domain;
  const Vec origin{0.0, 0.0};

  DensityCurve half = density_curve(halfplane, origin, {0.1}, 100000, 0);
  bool half_ok = std::fabs(half.ratios[0] - 0.5) <= 0.02;

  DensityCurve cusp_curve = density_curve(cusp, origin, {0.2, 0.1, 0.05, 0.025}, 100000, 0);
  double slope = 0.0;
  {
    std::vector<double> r = cusp_curve.radii, q = cusp_curve.ratios;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      double x = std::log(r[i]), y = std::log(q[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double n = static_cast<double>(r.size());
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < cusp_curve.ratios.size(); ++i)
    decreasing = decreasing && cusp_curve.ratios[i] < cusp_curve.ratios[i - 1];
  bool cusp_ok = decreasing && std::fabs(slope - 1.0) <= 0.2;

  double min_ratio = 1.0;
  for (const auto& domain : {std::function<bool(const Vec&)>(halfplane),
                             std::function<bool(const Vec&)>(quadrant),
                             std::function<bool(const Vec&)>(epi_abs)}) {
    DensityCurve curve = density_curve(domain, origin, {0.1, 0.05, 0.01}, 100000, 0);
    for (double q : curve.ratios) min_ratio = std::min(min_ratio, q);
  }
  bool epi_ok = min_ratio >= 0.1;

  c.pass = half_ok && cusp_ok && epi_ok;
  c.details["halfplane_ratio"] = half.ratios[0];
  c.details["cusp_ratios"] = to_json(cusp_curve.ratios);
  c.details["cusp_loglog_slope"] = slope;
  c.details["epi_lipschitz_min_ratio"] = min_ratio;
  c.summary = "half-plane " + fmt(half.ratios[0]) + ", cusp slope " + fmt(slope) +
              ", epi-Lipschitz min ratio " + fmt(min_ratio);
  return c;
}

// --- criterion 11: determinism -----------------------------------------------

CriterionResult criterion_determinism() {
  CriterionResult c{11, "determinism", true, "", Json::object()};

  auto payloads = [] {
    std::vector<std::string> out;
    EstimateArgs abs_args;
    abs_args.fn = "abs";
    abs_args.center = {0.0};
    abs_args.radius = 0.01;
    abs_args.samples = 500;
    abs_args.seed = 7;
    out.push_back(dump_report(cmd_estimate(abs_args)));

    EstimateArgs half_args;
    half_args.fn = "halfplane_smooth";
    half_args.center = {0.0, 0.0};
    half_args.samples = 2000;
    half_args.seed = 3;
    out.push_back(dump_report(cmd_stationarity(half_args)));

    DensityArgs dens;
    dens.fn = "cusp_indicator";
    dens.center = {0.0, 0.0};
    dens.radii = {0.1, 0.05};
    dens.samples = 20000;
    dens.seed = 1;
    out.push_back(dump_report(cmd_density(dens)));

    AccessArgs acc;
    acc.scenario = "abs";
    out.push_back(dump_report(cmd_access(acc)));
    return out;
  };

  const char* saved = std::getenv("CLARKE_KIT_THREADS");
  std::string saved_value = saved ? saved : "";

  setenv("CLARKE_KIT_THREADS", "1", 1);
  std::vector<std::string> run1 = payloads();
  std::vector<std::string> run1b = payloads();
  setenv("CLARKE_KIT_THREADS", "4", 1);
  std::vector<std::string> run4 = payloads();
  if (saved != nullptr)
    setenv("CLARKE_KIT_THREADS", saved_value.c_str(), 1);
  else
    unsetenv("CLARKE_KIT_THREADS");

  bool repeat_ok = run1 == run1b;
  bool threads_ok = run1 == run4;
  c.pass = repeat_ok && threads_ok;
  c.details["repeat_byte_identical"] = repeat_ok;
  c.details["threads_1_vs_4_byte_identical"] = threads_ok;
  c.summary = std::string("repeat ") + (repeat_ok ? "identical" : "DIFFERS") + ", threads 1 vs 4 " +
              (threads_ok ? "identical" : "DIFFERS");
  return c;
}

bool matches(const CriterionResult& c, const std::string& only) {
  if (only.empty()) return true;
  if (std::to_string(c.id) == only) return true;
  return c.name.find(only) != std::string::npos;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& only) {
  std::vector<CriterionResult> all;
  using Fn = CriterionResult (*)();
  const Fn criteria[] = {criterion_quartic,        criterion_abs,
                         criterion_no_false_positive, criterion_constrained,
                         criterion_parabola,       criterion_negative_cases,
                         criterion_kernel_oracles, criterion_boundary_cones,
                         criterion_accessibility,  criterion_density,
                         criterion_determinism};
  // Filtering must not rerun anything, so match on id/name stubs first.
  const std::pair<int, const char*> names[] = {
      {1, "quartic-reproduction"},   {2, "abs-reproduction"},
      {3, "no-false-positive"},      {4, "constrained-stationarity"},
      {5, "convex-formula-parabola"},{6, "negative-cases"},
      {7, "convex-kernel-oracles"},  {8, "boundary-generates-cone"},
      {9, "accessibility-traces"},   {10, "density-probe"},
      {11, "determinism"}};
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    CriterionResult stub;
    stub.id = names[i].first;
    stub.name = names[i].second;
    if (!matches(stub, only)) continue;
    all.push_back(criteria[i]());
  }
  return all;
}

Json cmd_verify(const std::string& only) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "verify";
  Json in;
  in["only"] = only;
  j["inputs"] = in;

  std::vector<CriterionResult> results = run_acceptance(only);
  bool all_pass = true;
  Json arr = Json::array();
  for (const CriterionResult& r : results) {
    Json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["summary"] = r.summary;
    item["details"] = r.details;
    arr.push_back(item);
    all_pass = all_pass && r.pass;
  }
  j["outputs"] = arr;
  j["pass_fail"] = all_pass;
  return j;
}

}  // namespace clarke
