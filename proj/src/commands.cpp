#include "clarke/commands.hpp"

#include <cmath>
#include <set>

#include "clarke/density.hpp"
#include "clarke/epigraph.hpp"
#include "clarke/sampler.hpp"

namespace clarke {

namespace {

Json echo_estimate_inputs(const EstimateArgs& a) {
  Json in;
  in["fn"] = a.fn;
  in["center"] = to_json(a.center);
  in["radius"] = a.radius;
  in["samples"] = a.samples;
  in["seed"] = a.seed;
  in["horizon_threshold"] = a.horizon_threshold;
  in["fd_step"] = a.fd_step;
  in["tol"] = a.tol;
  in["probe_dirs"] = a.probe_dirs;
  if (a.normals_override) {
    Json arr = Json::array();
    for (const Vec& g : *a.normals_override) arr.push_back(to_json(g));
    in["normals_override"] = arr;
  } else {
    in["normals_override"] = nullptr;
  }
  in["suppress_normals"] = a.suppress_normals;
  return in;
}

struct Assembled {
  SubdifferentialEstimate estimate;
  const CatalogEntry* entry;
};

Assembled assemble_for(const EstimateArgs& a) {
  const CatalogEntry& entry = catalog_entry(a.fn);
  SamplingConfig cfg;
  cfg.radius = a.radius;
  cfg.max_samples = a.samples;
  cfg.seed = a.seed;
  cfg.horizon_threshold = a.horizon_threshold;
  cfg.fd_step = a.fd_step;
  cfg.tol = a.tol;
  GradientCloud cloud = build_cloud(entry.fn, cfg, a.center);

  FiniteCone normals(entry.fn.dim, {});
  if (a.normals_override) {
    normals = FiniteCone(entry.fn.dim, *a.normals_override);
  } else if (!a.suppress_normals && entry.fn.normal_cone) {
    normals = entry.fn.normal_cone(a.center);
  }
  return {assemble_estimate(cloud, normals), &entry};
}

const ReferenceSubdifferential* reference_at(const CatalogEntry& entry, const Vec& center) {
  for (const ReferenceSubdifferential& r : entry.references)
    if (dist(r.base_point, center) <= 1e-12) return &r;
  return nullptr;
}

Json report_shell(const std::string& command) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  return j;
}

}  // namespace

Json cmd_estimate(const EstimateArgs& args) {
  Json j = report_shell("estimate");
  j["inputs"] = echo_estimate_inputs(args);

  Assembled a = assemble_for(args);
  const SubdifferentialEstimate& est = a.estimate;

  Json out;
  out["cloud"] = to_json(est.cloud);
  Json hull = Json::array();
  for (const Vec& v : extreme_vertices(est.set.hull.vertices, est.set.dim())) hull.push_back(to_json(v));
  out["hull_vertices"] = hull;
  Json cone = Json::array();
  for (const Vec& g : est.set.cone.generators) cone.push_back(to_json(g));
  out["cone_generators"] = cone;
  // exact dedup keeps the report compact; duplicate lifted rays carry no
  // extra information about the cone
  std::set<Vec> seen;
  Json lifted = Json::array();
  for (const Vec& g : est.lifted_generators)
    if (seen.insert(g).second) lifted.push_back(to_json(g));
  out["lifted_generators"] = lifted;

  const ReferenceSubdifferential* ref = reference_at(*a.entry, args.center);
  if (ref != nullptr) {
    double h = hausdorff_vs_reference(est, *ref, args.probe_dirs);
    out["hausdorff_vs_reference"] = h;
    j["outputs"] = out;
    j["pass_fail"] = h <= args.tol;
  } else {
    j["outputs"] = out;
    j["pass_fail"] = nullptr;
  }
  return j;
}

Json cmd_stationarity(const EstimateArgs& args) {
  Json j = report_shell("stationarity");
  j["inputs"] = echo_estimate_inputs(args);

  Assembled a = assemble_for(args);
  StationarityReport rep = test_stationarity(a.estimate, args.tol);

  Json out;
  out["distance_to_zero"] = rep.distance_to_zero;
  out["is_stationary"] = rep.is_stationary;
  out["witness"] = to_json(rep.witness);
  out["draws_used"] = rep.draws_used;
  out["cloud"] = to_json(a.estimate.cloud);
  j["outputs"] = out;
  j["pass_fail"] = nullptr;
  return j;
}

Json cmd_distance(const DistanceArgs& args) {
  Json j = report_shell("distance");
  Json in = echo_estimate_inputs(args.est);
  in["v"] = to_json(args.v);
  j["inputs"] = in;

  Assembled a = assemble_for(args.est);
  Json out;
  out["distance"] = estimate_distance(a.estimate, args.v);
  out["cloud"] = to_json(a.estimate.cloud);
  j["outputs"] = out;
  j["pass_fail"] = nullptr;
  return j;
}

Json cmd_access(const AccessArgs& args) {
  Json j = report_shell("access");
  AccessibilityScenario scenario = shipped_scenario(args.scenario);
  if (args.t0 || args.ratio || args.steps) {
    double t0 = args.t0.value_or(0.1);
    double ratio = args.ratio.value_or(0.5);
    int steps = args.steps.value_or(8);
    scenario.t_schedule.clear();
    double t = t0;
    for (int i = 0; i < steps; ++i) {
      scenario.t_schedule.push_back(t);
      t *= ratio;
    }
  }
  if (args.grid) scenario.grid = *args.grid;

  Json in;
  in["scenario"] = scenario.name;
  in["t_schedule"] = to_json(scenario.t_schedule);
  in["grid"] = scenario.grid;
  in["v_bar"] = to_json(scenario.v_bar);
  in["w_bar"] = to_json(scenario.w_bar);
  j["inputs"] = in;

  AccessibilityTrace trace = run_accessibility(scenario);
  Json recs = Json::array();
  std::vector<double> ts, rs;
  for (const TraceRecord& r : trace.records) {
    Json rec;
    rec["t"] = r.t;
    rec["y"] = to_json(r.y.x);
    rec["y_height"] = r.y.r;
    rec["x"] = to_json(r.x.x);
    rec["x_height"] = r.x.r;
    rec["proximal_normal"] = to_json(r.proximal_normal);
    rec["residual"] = r.residual;
    rec["dist_from_base"] = r.dist_from_base;
    recs.push_back(rec);
    ts.push_back(r.t);
    rs.push_back(r.residual);
  }
  Json out;
  out["records"] = recs;
  out["loglog_slope"] = loglog_slope(ts, rs);
  j["outputs"] = out;
  j["pass_fail"] = nullptr;
  return j;
}

Json cmd_density(const DensityArgs& args) {
  Json j = report_shell("density");
  Json in;
  in["fn"] = args.fn;
  in["center"] = to_json(args.center);
  in["radii"] = to_json(args.radii);
  in["samples"] = args.samples;
  in["seed"] = args.seed;
  j["inputs"] = in;

  const CatalogEntry& entry = catalog_entry(args.fn);
  DensityCurve curve = density_curve(entry.fn.in_domain, args.center, args.radii, args.samples, args.seed);
  Json out;
  out["radii"] = to_json(curve.radii);
  out["ratios"] = to_json(curve.ratios);
  j["outputs"] = out;
  j["pass_fail"] = nullptr;
  return j;
}

Json cmd_catalog() {
  Json j = report_shell("catalog");
  j["inputs"] = Json::object();
  Json out = Json::array();
  for (const CatalogEntry& e : catalog()) {
    Json item;
    item["name"] = e.name;
    item["dim"] = e.fn.dim;
    item["has_gradient_oracle"] = static_cast<bool>(e.fn.gradient);
    item["has_normal_cone_oracle"] = static_cast<bool>(e.fn.normal_cone);
    Json meta;
    meta["directionally_lipschitzian"] = e.fn.meta.directionally_lipschitzian;
    meta["vertically_continuous"] = e.fn.meta.vertically_continuous;
    meta["continuous_on_domain"] = e.fn.meta.continuous_on_domain;
    meta["stratifiable"] = e.fn.meta.stratifiable;
    item["metadata"] = meta;
    Json refs = Json::array();
    for (const ReferenceSubdifferential& r : e.references) {
      Json ref;
      ref["base_point"] = to_json(r.base_point);
      ref["set"] = to_json(r.set);
      ref["source"] = r.source;
      refs.push_back(ref);
    }
    item["references"] = refs;
    Json mrefs = Json::array();
    for (const MembershipReference& r : e.membership_references) {
      Json ref;
      ref["base_point"] = to_json(r.base_point);
      ref["source"] = r.source;
      mrefs.push_back(ref);
    }
    item["membership_references"] = mrefs;
    item["notes"] = e.notes;
    out.push_back(item);
  }
  j["outputs"] = out;
  j["pass_fail"] = nullptr;
  return j;
}

std::string estimate_csv(const EstimateArgs& args) {
  Assembled a = assemble_for(args);
  return points_csv(a.estimate.cloud.kept_gradients);
}

}  // namespace clarke
