#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clarke/commands.hpp"
#include "clarke/verify.hpp"

namespace {

using clarke::Vec;

// command-line vectors: comma-separated decimals, no spaces
Vec parse_vec(const std::string& s) {
  Vec v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    v.push_back(std::stod(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return v;
}

std::vector<Vec> parse_vec_list(const std::string& s) {
  std::vector<Vec> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(';', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(parse_vec(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  Vec v = parse_vec(s);
  return v;
}

int emit(const clarke::Json& report, const std::string& out_path) {
  std::string text = clarke::dump_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << text;
  }
  if (report.contains("pass_fail") && report["pass_fail"].is_boolean() &&
      !report["pass_fail"].get<bool>())
    return 1;
  return 0;
}

struct EstimateFlags {
  std::string fn, center, normals, out, csv;
  double radius = 0.01, threshold = 1e3, fd_step = 1e-6, tol = 0.05;
  int samples = 1000, probe_dirs = 64;
  std::uint64_t seed = 0;
  bool no_normals = false;

  clarke::EstimateArgs to_args() const {
    clarke::EstimateArgs a;
    a.fn = fn;
    a.center = parse_vec(center);
    a.radius = radius;
    a.samples = samples;
    a.seed = seed;
    a.horizon_threshold = threshold;
    a.fd_step = fd_step;
    a.tol = tol;
    a.probe_dirs = probe_dirs;
    if (!normals.empty()) a.normals_override = parse_vec_list(normals);
    a.suppress_normals = no_normals;
    return a;
  }
};

void add_estimate_flags(CLI::App* cmd, EstimateFlags& f) {
  cmd->add_option("--fn", f.fn, "catalog function name")->required();
  cmd->add_option("--center", f.center, "base point, comma-separated")->required();
  cmd->add_option("--radius", f.radius, "sampling radius");
  cmd->add_option("--samples", f.samples, "trial count");
  cmd->add_option("--seed", f.seed, "sampling seed (default 0)");
  cmd->add_option("--horizon-threshold", f.threshold, "gradient norm above which a draw becomes a horizon ray");
  cmd->add_option("--fd-step", f.fd_step, "finite-difference step for gradient-free oracles");
  cmd->add_option("--tol", f.tol, "tolerance (stationarity / reference check)");
  cmd->add_option("--probe-dirs", f.probe_dirs, "support probe directions");
  cmd->add_option("--normals", f.normals, "override normal cone generators, e.g. \"-1,0;0,1\"");
  cmd->add_flag("--no-normals", f.no_normals, "suppress catalog normal cone");
  cmd->add_option("--out", f.out, "write the JSON report here (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clarke-kit: gradient sampling for Clarke subdifferentials of "
               "directionally Lipschitzian functions"};
  app.require_subcommand(1);

  EstimateFlags est_flags, stat_flags, dist_flags;
  std::string dist_v;

  CLI::App* est = app.add_subcommand("estimate", "sample gradients and assemble the estimate");
  add_estimate_flags(est, est_flags);
  est->add_option("--csv", est_flags.csv, "also write kept gradients as CSV");

  CLI::App* stat = app.add_subcommand("stationarity", "test whether 0 lies in the estimate");
  add_estimate_flags(stat, stat_flags);

  CLI::App* dist = app.add_subcommand("distance", "distance from a probe vector to the estimate");
  add_estimate_flags(dist, dist_flags);
  dist->add_option("--v", dist_v, "probe vector")->required();

  std::string access_name, access_out;
  double access_t0 = 0.0, access_ratio = 0.0;
  int access_steps = 0, access_grid = 0;
  CLI::App* acc = app.add_subcommand("access", "run an epigraph accessibility trace");
  acc->add_option("--scenario", access_name, "abs | halfspace | quartic")->required();
  acc->add_option("--t0", access_t0, "initial step of the t-schedule");
  acc->add_option("--ratio", access_ratio, "geometric ratio of the t-schedule");
  acc->add_option("--steps", access_steps, "schedule length");
  acc->add_option("--grid", access_grid, "projection grid points per axis");
  acc->add_option("--out", access_out, "write the JSON report here (default stdout)");

  std::string dens_fn, dens_center, dens_radii, dens_out, dens_csv;
  int dens_samples = 100000;
  std::uint64_t dens_seed = 0;
  CLI::App* dens = app.add_subcommand("density", "Monte-Carlo lower-density curve of a domain");
  dens->add_option("--fn", dens_fn, "catalog function whose domain is probed")->required();
  dens->add_option("--center", dens_center, "center point")->required();
  dens->add_option("--radii", dens_radii, "decreasing radii, comma-separated")->required();
  dens->add_option("--samples", dens_samples, "samples per radius");
  dens->add_option("--seed", dens_seed, "seed (default 0)");
  dens->add_option("--out", dens_out, "write the JSON report here (default stdout)");
  dens->add_option("--csv", dens_csv, "also write radius,ratio rows as CSV");

  std::string verify_only, verify_out;
  CLI::App* ver = app.add_subcommand("verify", "run the acceptance criteria");
  ver->add_option("--only", verify_only, "filter criteria by id or name substring");
  ver->add_option("--out", verify_out, "write the JSON report here (default stdout)");

  std::string catalog_out;
  CLI::App* cat = app.add_subcommand("catalog", "list catalog entries, metadata and references");
  cat->add_option("--out", catalog_out, "write the JSON report here (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (est->parsed()) {
      clarke::Json rep = clarke::cmd_estimate(est_flags.to_args());
      if (!est_flags.csv.empty()) {
        std::ofstream f(est_flags.csv, std::ios::binary);
        f << clarke::estimate_csv(est_flags.to_args());
      }
      return emit(rep, est_flags.out);
    }
    if (stat->parsed()) return emit(clarke::cmd_stationarity(stat_flags.to_args()), stat_flags.out);
    if (dist->parsed()) {
      clarke::DistanceArgs a{dist_flags.to_args(), parse_vec(dist_v)};
      return emit(clarke::cmd_distance(a), dist_flags.out);
    }
    if (acc->parsed()) {
      clarke::AccessArgs a;
      a.scenario = access_name;
      if (access_t0 > 0.0) a.t0 = access_t0;
      if (access_ratio > 0.0) a.ratio = access_ratio;
      if (access_steps > 0) a.steps = access_steps;
      if (access_grid > 0) a.grid = access_grid;
      return emit(clarke::cmd_access(a), access_out);
    }
    if (dens->parsed()) {
      clarke::DensityArgs a;
      a.fn = dens_fn;
      a.center = parse_vec(dens_center);
      a.radii = parse_list(dens_radii);
      a.samples = dens_samples;
      a.seed = dens_seed;
      clarke::Json rep = clarke::cmd_density(a);
      if (!dens_csv.empty()) {
        std::ofstream f(dens_csv, std::ios::binary);
        f << "radius,ratio\n";
        char buf[96];
        const auto& radii = rep["outputs"]["radii"];
        const auto& ratios = rep["outputs"]["ratios"];
        for (std::size_t i = 0; i < radii.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", radii[i].get<double>(),
                        ratios[i].get<double>());
          f << buf;
        }
      }
      return emit(rep, dens_out);
    }
    if (ver->parsed()) return emit(clarke::cmd_verify(verify_only), verify_out);
    if (cat->parsed()) return emit(clarke::cmd_catalog(), catalog_out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
