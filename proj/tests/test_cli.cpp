#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + CLARKE_KIT_BIN + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("estimate on abs reproduces the reference interval") {
  RunResult r = run("estimate --fn abs --center 0 --radius 0.01 --samples 500 --seed 7");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["schema_version"] == "clarke-kit-report/1");
  CHECK(j["inputs"]["seed"] == 7);
  CHECK(j["outputs"]["hausdorff_vs_reference"].get<double>() <= 0.01);
  CHECK(j["pass_fail"].get<bool>());
  bool plus = false, minus = false;
  for (const auto& v : j["outputs"]["hull_vertices"]) {
    if (v[0].get<double>() == 1.0) plus = true;
    if (v[0].get<double>() == -1.0) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("estimate on quartic_root reports infinite vertical support") {
  RunResult r = run(
      "estimate --fn quartic_root --center 0,0 --radius 0.01 --samples 4000 --seed 7");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  bool up = false;
  for (const auto& g : j["outputs"]["cone_generators"]) {
    double gx = g[0].get<double>(), gy = g[1].get<double>();
    if (std::hypot(gx, gy - 1.0) <= 0.05) up = true;
  }
  CHECK(up);
}

TEST_CASE("stationarity verdicts") {
  Json j = Json::parse(run("stationarity --fn abs --center 0 --radius 0.01 --samples 500").out);
  CHECK(j["outputs"]["is_stationary"].get<bool>());
  CHECK(j["inputs"]["seed"] == 0);  // defaulted and echoed

  j = Json::parse(run("stationarity --fn linear --center 0 --radius 0.1 --samples 500").out);
  CHECK_FALSE(j["outputs"]["is_stationary"].get<bool>());
  CHECK(j["outputs"]["distance_to_zero"].get<double>() == doctest::Approx(1.0).epsilon(0.01));

  j = Json::parse(
      run("stationarity --fn halfplane_smooth --center 0,0 --radius 0.01 --samples 1000").out);
  CHECK(j["outputs"]["is_stationary"].get<bool>());
  j = Json::parse(run("stationarity --fn halfplane_smooth --center 0,0 --radius 0.01 "
                      "--samples 1000 --no-normals")
                      .out);
  CHECK_FALSE(j["outputs"]["is_stationary"].get<bool>());
}

TEST_CASE("distance command") {
  Json j = Json::parse(
      run("distance --fn abs --center 0 --radius 0.01 --samples 500 --v 3").out);
  CHECK(j["outputs"]["distance"].get<double>() == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("access and density commands run and echo inputs") {
  Json j = Json::parse(run("access --scenario abs").out);
  CHECK(j["outputs"]["records"].size() == 8);
  CHECK(j["outputs"]["loglog_slope"].get<double>() > 0.9);

  j = Json::parse(run("density --fn cusp_indicator --center 0,0 --radii 0.1,0.05 "
                      "--samples 20000 --seed 3")
                      .out);
  CHECK(j["inputs"]["samples"] == 20000);
  CHECK(j["outputs"]["ratios"].size() == 2);
  double r0 = j["outputs"]["ratios"][0].get<double>();
  CHECK(r0 > 0.0);
  CHECK(r0 < 0.1);
}

TEST_CASE("catalog lists every entry") {
  Json j = Json::parse(run("catalog").out);
  CHECK(j["outputs"].size() >= 7);
  bool has_quartic = false;
  for (const auto& e : j["outputs"])
    if (e["name"] == "quartic_root") {
      has_quartic = true;
      CHECK(e["metadata"]["directionally_lipschitzian"].get<bool>());
    }
  CHECK(has_quartic);
}

TEST_CASE("unknown function fails with nonzero exit") {
  RunResult r = run("estimate --fn nope --center 0");
  CHECK(r.exit_code != 0);
}

TEST_CASE("reports are byte-identical across reruns and worker counts") {
  std::string a = run("estimate --fn quartic_root --center 0,0 --samples 1500 --seed 7").out;
  std::string b = run("estimate --fn quartic_root --center 0,0 --samples 1500 --seed 7").out;
  CHECK(a == b);
  std::string t1 =
      run("estimate --fn quartic_root --center 0,0 --samples 1500 --seed 7", "CLARKE_KIT_THREADS=1").out;
  std::string t4 =
      run("estimate --fn quartic_root --center 0,0 --samples 1500 --seed 7", "CLARKE_KIT_THREADS=4").out;
  CHECK(a == t1);
  CHECK(a == t4);
}

TEST_CASE("payloads do not depend on the SIMD backend") {
  std::string scalar = run("estimate --fn quartic_root --center 0,0 --samples 2000 --seed 7",
                           "CLARKE_KIT_SIMD=scalar").out;
  std::string native = run("estimate --fn quartic_root --center 0,0 --samples 2000 --seed 7").out;
  CHECK(scalar == native);
}

TEST_CASE("full verify run is byte-identical across reruns and worker counts") {
  RunResult a = run("verify");
  RunResult b = run("verify", "CLARKE_KIT_THREADS=1");
  RunResult c = run("verify", "CLARKE_KIT_THREADS=4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  Json j = Json::parse(a.out);
  CHECK(j["outputs"].size() == 11);
  CHECK(j["pass_fail"].get<bool>());
}

TEST_CASE("verify subcommand is reproducible and filterable") {
  RunResult a = run("verify --only density");
  RunResult b = run("verify --only density");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::string t1 = run("verify --only density", "CLARKE_KIT_THREADS=1").out;
  std::string t4 = run("verify --only density", "CLARKE_KIT_THREADS=4").out;
  CHECK(a.out == t1);
  CHECK(a.out == t4);

  Json j = Json::parse(a.out);
  CHECK(j["outputs"].size() == 1);
  CHECK(j["outputs"][0]["name"] == "density-probe");
  CHECK(j["pass_fail"].get<bool>());
}

TEST_CASE("csv export carries the header row") {
  std::string path = "/tmp/clarke_kit_test_points.csv";
  run("estimate --fn abs --center 0 --samples 50 --csv " + path + " --out /tmp/clarke_kit_rep.json");
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "index,coord_0");
  std::remove(path.c_str());
  std::remove("/tmp/clarke_kit_rep.json");
}
