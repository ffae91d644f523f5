#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clarke/epigraph.hpp"
#include "clarke/rng.hpp"

using namespace clarke;

namespace {

ExtendedFunction zero_fn() {
  ExtendedFunction f;
  f.dim = 1;
  f.value = [](const Vec&) { return 0.0; };
  f.in_domain = [](const Vec&) { return true; };
  return f;
}

// closed-form projection onto epi |x|
EpigraphPoint project_epi_abs(const EpigraphPoint& y) {
  double p = y.x[0], q = y.r;
  if (q >= std::fabs(p)) return y;
  if (q <= -std::fabs(p)) return {{0.0}, 0.0};
  double m = 0.5 * (std::fabs(p) + q);
  return {{p > 0 ? m : -m}, m};
}

}  // namespace

TEST_CASE("project_epigraph worked examples") {
  const ExtendedFunction& ab = catalog_entry("abs").fn;
  EpigraphPoint p = project_epigraph(ab, {{0.0}, -1.0}, 2.0, 401);
  CHECK(std::fabs(p.x[0]) < 1e-6);
  CHECK(std::fabs(p.r) < 1e-6);

  p = project_epigraph(zero_fn(), {{3.0}, -2.0}, 2.0, 401);
  CHECK(p.x[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(p.r == doctest::Approx(0.0));

  // nearest point of epi|x| to (1,-1) is the apex, at distance sqrt(2)
  p = project_epigraph(ab, {{1.0}, -1.0}, 3.0, 401);
  CHECK(std::fabs(p.x[0]) < 1e-5);
  CHECK(std::fabs(p.r) < 1e-5);
  double d = std::hypot(p.x[0] - 1.0, p.r + 1.0);
  CHECK(d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("projection matches closed forms and beats random epigraph points") {
  const ExtendedFunction& ab = catalog_entry("abs").fn;
  rng::Key key = rng::make_key(31, 0x4000);
  for (int i = 0; i < 40; ++i) {
    EpigraphPoint y{{4.0 * rng::u01(key, i, 0) - 2.0}, 4.0 * rng::u01(key, i, 1) - 2.0};
    EpigraphPoint mine = project_epigraph(ab, y, 4.0, 401);
    EpigraphPoint exact = project_epi_abs(y);
    CHECK(std::fabs(mine.x[0] - exact.x[0]) < 1e-4);
    CHECK(std::fabs(mine.r - exact.r) < 1e-4);

    double dmine = std::hypot(mine.x[0] - y.x[0], mine.r - y.r);
    for (int z = 0; z < 1000; ++z) {
      double zx = y.x[0] + 8.0 * rng::u01(key, i, 100 + 2 * z) - 4.0;
      double zr = std::fabs(zx) + 4.0 * rng::u01(key, i, 101 + 2 * z);
      CHECK(dmine <= std::hypot(zx - y.x[0], zr - y.r) + 1e-9);
    }
  }

  // domain indicator: projection clamps both coordinates
  ExtendedFunction ind;
  ind.dim = 1;
  ind.value = [](const Vec& x) {
    return x[0] >= 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  };
  ind.in_domain = [](const Vec& x) { return x[0] >= 0.0; };
  EpigraphPoint p = project_epigraph(ind, {{-1.5, }, -0.75}, 3.0, 401);
  CHECK(std::fabs(p.x[0]) < 1e-6);
  CHECK(std::fabs(p.r) < 1e-6);
}

TEST_CASE("project_epigraph error when the box misses the domain") {
  ExtendedFunction far_domain;
  far_domain.dim = 1;
  far_domain.value = [](const Vec& x) {
    return x[0] >= 100.0 ? 0.0 : std::numeric_limits<double>::infinity();
  };
  far_domain.in_domain = [](const Vec& x) { return x[0] >= 100.0; };
  CHECK_THROWS_WITH_AS(project_epigraph(far_domain, {{0.0}, 0.0}, 1.0, 51),
                       "no epigraph points in box", std::runtime_error);
}

TEST_CASE("accessibility trace for the abs scenario follows the closed form") {
  AccessibilityTrace trace = run_accessibility(shipped_scenario("abs"));
  REQUIRE(trace.records.size() == 8);
  double prev = 1e300;
  for (const TraceRecord& rec : trace.records) {
    // exact projection gives x(t) = (t^2/2, t^2/2) and residual t/sqrt(2)
    CHECK(std::fabs(rec.x.x[0] - rec.t * rec.t / 2.0) < 1e-4);
    CHECK(std::fabs(rec.residual - rec.t / std::sqrt(2.0)) < 1e-3);
    CHECK(rec.residual < prev);
    prev = rec.residual;
    CHECK(rec.x.r >= std::fabs(rec.x.x[0]) - 1e-9);  // inside the epigraph
    CHECK(rec.dist_from_base > 0.0);                 // left the base point
  }
  std::vector<double> ts, rs;
  for (const TraceRecord& rec : trace.records) {
    ts.push_back(rec.t);
    rs.push_back(rec.residual);
  }
  CHECK(loglog_slope(ts, rs) > 0.9);
}

TEST_CASE("half-space scenario has identically vanishing residuals") {
  AccessibilityTrace trace = run_accessibility(shipped_scenario("halfspace"));
  for (const TraceRecord& rec : trace.records) {
    CHECK(rec.residual <= 1e-12);
    CHECK(std::fabs(rec.proximal_normal[1] + 1.0) <= 1e-12);
  }
}

TEST_CASE("quartic scenario residuals shrink along the schedule") {
  AccessibilityTrace trace = run_accessibility(shipped_scenario("quartic"));
  std::vector<double> ts, rs;
  for (const TraceRecord& rec : trace.records) {
    ts.push_back(rec.t);
    rs.push_back(rec.residual);
    double fval = trace.scenario.fn.value(rec.x.x);
    CHECK(rec.x.r >= fval - 1e-9);
  }
  CHECK(loglog_slope(ts, rs) > 0.0);
  CHECK(rs.back() <= 0.1);
  // the trace reaches t <= 1e-3 with residual already below 0.1
  CHECK(ts.back() <= 1e-3);
}

TEST_CASE("run_accessibility validates its schedule") {
  AccessibilityScenario s = shipped_scenario("abs");
  s.t_schedule = {0.1, 0.2};
  CHECK_THROWS(run_accessibility(s));
}
