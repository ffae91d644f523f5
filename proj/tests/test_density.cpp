#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clarke/density.hpp"
#include "clarke/function_model.hpp"

using namespace clarke;

namespace {
const Vec kOrigin{0.0, 0.0};
}

TEST_CASE("half-plane and full-plane ratios") {
  auto halfplane = [](const Vec& p) { return p[0] >= 0.0; };
  DensityCurve c = density_curve(halfplane, kOrigin, {0.5}, 10000, 0);
  CHECK(std::fabs(c.ratios[0] - 0.5) < 0.02);

  auto whole_plane = [](const Vec&) { return true; };
  c = density_curve(whole_plane, kOrigin, {0.5}, 2000, 0);
  CHECK(c.ratios[0] == 1.0);
}

TEST_CASE("cusp domain density vanishes linearly") {
  const auto& cusp = catalog_entry("cusp_indicator").fn.in_domain;
  DensityCurve c = density_curve(cusp, kOrigin, {0.2, 0.1, 0.05, 0.025}, 100000, 0);

  // exact small-radius area of {|y| <= x^2, x >= 0} in B_delta is
  // 2 delta^3 / 3 + O(delta^5), so the ratio is 2 delta / (3 pi)
  for (std::size_t i = 0; i < c.radii.size(); ++i) {
    double expected = 2.0 * c.radii[i] / (3.0 * M_PI);
    CHECK(std::fabs(c.ratios[i] - expected) < 0.005);
  }
  for (std::size_t i = 1; i < c.ratios.size(); ++i) CHECK(c.ratios[i] < c.ratios[i - 1]);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < c.radii.size(); ++i) {
    double x = std::log(c.radii[i]), y = std::log(c.ratios[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(c.radii.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(std::fabs(slope - 1.0) < 0.2);
}

TEST_CASE("epi-Lipschitzian domains keep positive density") {
  auto quadrant = [](const Vec& p) { return p[0] >= 0.0 && p[1] >= 0.0; };
  auto epi_abs = [](const Vec& p) { return p[1] >= std::fabs(p[0]); };
  for (const auto& domain : {std::function<bool(const Vec&)>(quadrant),
                             std::function<bool(const Vec&)>(epi_abs)}) {
    DensityCurve c = density_curve(domain, kOrigin, {0.1, 0.05, 0.01}, 20000, 3);
    for (double q : c.ratios) CHECK(q >= 0.1);
  }
}

TEST_CASE("seed determinism and sample-doubling stability") {
  auto halfplane = [](const Vec& p) { return p[0] >= 0.0; };
  DensityCurve a = density_curve(halfplane, kOrigin, {0.1, 0.05}, 10000, 7);
  DensityCurve b = density_curve(halfplane, kOrigin, {0.1, 0.05}, 10000, 7);
  CHECK(a.ratios == b.ratios);

  DensityCurve dbl = density_curve(halfplane, kOrigin, {0.1, 0.05}, 20000, 7);
  for (std::size_t i = 0; i < a.ratios.size(); ++i) {
    double sigma = std::sqrt(0.25 / 10000.0);
    CHECK(std::fabs(dbl.ratios[i] - a.ratios[i]) <= 3.0 * sigma);
  }
}

TEST_CASE("precondition errors") {
  auto any = [](const Vec&) { return true; };
  CHECK_THROWS(density_curve(any, kOrigin, {0.1}, 10, 0));          // too few samples
  CHECK_THROWS(density_curve(any, kOrigin, {0.1, 0.2}, 5000, 0));   // not decreasing
  CHECK_THROWS(density_curve(any, kOrigin, {-0.1}, 5000, 0));       // not positive
}
