#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "clarke/geometry.hpp"
#include "clarke/oracles.hpp"
#include "clarke/rng.hpp"

using namespace clarke;

namespace {

Vec random_point(rng::Key key, std::uint64_t inst, int slot_base, int dim, double box = 2.0) {
  Vec v(static_cast<std::size_t>(dim), 0.0);
  for (int d = 0; d < dim; ++d)
    v[static_cast<std::size_t>(d)] =
        box * (2.0 * rng::u01(key, inst, static_cast<std::uint64_t>(slot_base + d)) - 1.0);
  return v;
}

MinkowskiSet mset(int dim, std::vector<Vec> hull, std::vector<Vec> cone) {
  return MinkowskiSet(Polytope(dim, std::move(hull)), FiniteCone(dim, std::move(cone)));
}

}  // namespace

TEST_CASE("min_norm_point worked examples") {
  // symmetric pair
  Vec p = min_norm_point({{1.0, 0.0}, {0.0, 1.0}}).point;
  CHECK(dist(p, {0.5, 0.5}) < 1e-9);
  // origin is a vertex
  p = min_norm_point({{0.0, 0.0}, {1.0, 1.0}}).point;
  CHECK(norm(p) < 1e-12);
  // projection onto a segment: minimize |(2-2t, t)| over t in [0,1] => t=0.8
  p = min_norm_point({{2.0, 0.0}, {0.0, 1.0}}).point;
  CHECK(dist(p, {0.4, 0.8}) < 1e-9);

  CHECK_THROWS_WITH_AS(min_norm_point({}), "empty point set", std::invalid_argument);
}

TEST_CASE("min_norm_point satisfies the Wolfe criterion on random instances") {
  rng::Key key = rng::make_key(11, 0x2000);
  for (int inst = 0; inst < 500; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, inst, 0) % 4);
    int npts = 3 + static_cast<int>(rng::bits(key, inst, 1) % 8);
    std::vector<Vec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(random_point(key, inst, 8 + 8 * i, dim));
    MinNormResult r = min_norm_point(pts);
    double c = norm_sq(r.point);
    for (const Vec& q : pts) CHECK(dot(r.point, sub(q, r.point)) >= -1e-8 * (1.0 + c));
    // support reconstructs the point with at most dim+1 convex weights
    CHECK(r.support.size() <= static_cast<std::size_t>(dim) + 1);
    double wsum = 0.0;
    Vec rec(static_cast<std::size_t>(dim), 0.0);
    for (auto& [i, w] : r.support) {
      CHECK(w >= 0.0);
      wsum += w;
      rec = add(rec, scaled(pts[i], w));
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dist(rec, r.point) < 1e-9);
  }
}

TEST_CASE("min_norm_point matches the lattice brute-force oracle") {
  rng::Key key = rng::make_key(12, 0x2001);
  for (int inst = 0; inst < 60; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, inst, 0) % 2);
    int npts = 3 + static_cast<int>(rng::bits(key, inst, 1) % 4);
    std::vector<Vec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(random_point(key, inst, 8 + 8 * i, dim));
    Vec mine = min_norm_point(pts).point;
    Vec ref = oracles::min_norm_bruteforce(pts);
    CHECK(dist(mine, ref) < 1e-7);
  }
}

TEST_CASE("distance_to_minkowski worked examples") {
  // cone points away from v
  DistanceResult r = distance_to_minkowski({-1.0, 0.0}, mset(2, {{0.0, 0.0}}, {{1.0, 0.0}}));
  CHECK(r.distance == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist(r.witness, {0.0, 0.0}) < 1e-6);
  // vertical ray
  r = distance_to_minkowski({2.0, 3.0}, mset(2, {{0.0, 0.0}}, {{0.0, 1.0}}));
  CHECK(r.distance == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dist(r.witness, {0.0, 3.0}) < 1e-6);
  // projection onto a segment
  r = distance_to_minkowski({1.0, 1.0}, mset(2, {{0.0, 0.0}, {2.0, 0.0}}, {}));
  CHECK(r.distance == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist(r.witness, {1.0, 0.0}) < 1e-6);
  // empty hull stands for {0}
  r = distance_to_minkowski({3.0, 4.0}, mset(2, {}, {}));
  CHECK(r.distance == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("distance is monotone under generator addition") {
  rng::Key key = rng::make_key(13, 0x2002);
  for (int inst = 0; inst < 100; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, inst, 0) % 2);
    std::vector<Vec> hull, cone;
    int nh = 1 + static_cast<int>(rng::bits(key, inst, 1) % 4);
    int nc = static_cast<int>(rng::bits(key, inst, 2) % 3);
    for (int i = 0; i < nh; ++i) hull.push_back(random_point(key, inst, 8 + 8 * i, dim));
    for (int i = 0; i < nc; ++i) {
      Vec g = random_point(key, inst, 100 + 8 * i, dim);
      if (norm(g) > 1e-9) cone.push_back(g);
    }
    Vec v = random_point(key, inst, 200, dim, 3.0);
    double before = distance_to_minkowski(v, mset(dim, hull, cone)).distance;

    std::vector<Vec> hull2 = hull;
    hull2.push_back(random_point(key, inst, 300, dim));
    CHECK(distance_to_minkowski(v, mset(dim, hull2, cone)).distance <= before + 1e-7);

    std::vector<Vec> cone2 = cone;
    Vec g = random_point(key, inst, 400, dim);
    if (norm(g) > 1e-9) {
      cone2.push_back(g);
      CHECK(distance_to_minkowski(v, mset(dim, hull, cone2)).distance <= before + 1e-7);
    }
  }
}

TEST_CASE("contains worked examples and permutation invariance") {
  CHECK(contains({0.0, 0.0}, mset(2, {{-1.0, 0.0}, {1.0, 0.0}}, {}), 1e-9));
  CHECK_FALSE(contains({0.0, 1.0}, mset(2, {{-1.0, 0.0}, {1.0, 0.0}}, {}), 1e-9));
  CHECK(contains({5.0, 5.0}, mset(2, {{0.0, 0.0}}, {{1.0, 1.0}}), 1e-9));

  std::vector<Vec> hull{{0.0, 1.0}, {2.0, 0.5}, {-1.0, -1.0}, {0.5, 0.5}};
  std::vector<Vec> cone{{1.0, 0.2}, {0.3, 1.0}};
  Vec v{0.7, 2.3};
  bool base = contains(v, mset(2, hull, cone), 0.5);
  std::reverse(hull.begin(), hull.end());
  std::swap(cone[0], cone[1]);
  CHECK(contains(v, mset(2, hull, cone), 0.5) == base);
}

TEST_CASE("cone_is_pointed worked examples") {
  CHECK(cone_is_pointed(FiniteCone(2, {{1.0, 0.0}, {0.0, 1.0}})));
  CHECK_FALSE(cone_is_pointed(FiniteCone(2, {{1.0, 0.0}, {-1.0, 0.0}})));
  CHECK_FALSE(cone_is_pointed(FiniteCone(2, {{1.0, 0.0}, {0.0, 1.0}, {-1.0, -1.0}})));
  CHECK(cone_is_pointed(FiniteCone(3, {})));  // cone(emptyset) = {0}
  CHECK_THROWS(FiniteCone(2, {{0.0, 0.0}}));  // zero generators rejected
}

TEST_CASE("cone_is_pointed agrees with the LP feasibility oracle") {
  rng::Key key = rng::make_key(14, 0x2003);
  for (int inst = 0; inst < 200; ++inst) {
    int dim = 2 + static_cast<int>(rng::bits(key, inst, 0) % 3);
    int ngen = 2 + static_cast<int>(rng::bits(key, inst, 1) % 5);
    std::vector<Vec> gens;
    for (int i = 0; i < ngen; ++i) {
      Vec g = random_point(key, inst, 8 + 8 * i, dim);
      if (norm(g) < 1e-9) g[0] = 1.0;
      gens.push_back(normalized(g));
    }
    CHECK(cone_is_pointed(FiniteCone(dim, gens)) == !oracles::lp_zero_in_convex_hull(gens));
  }
}

TEST_CASE("caratheodory_reduce worked examples") {
  auto r = caratheodory_reduce({0.5, 0.5}, {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.0, 0.0}});
  CHECK(r.size() <= 3);
  Vec rec(2, 0.0);
  double wsum = 0.0;
  for (auto& [w, p] : r) {
    CHECK(w >= 0.0);
    wsum += w;
    rec = add(rec, scaled(p, w));
  }
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist(rec, {0.5, 0.5}) < 1e-8);

  r = caratheodory_reduce({1.0, 0.0}, {{1.0, 0.0}, {0.0, 1.0}});
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == doctest::Approx(1.0));
  CHECK(dist(r[0].second, {1.0, 0.0}) < 1e-12);

  // barycentric weights of (0.25,0.25) in the standard triangle
  r = caratheodory_reduce({0.25, 0.25}, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  REQUIRE(r.size() == 3);
  double w00 = 0, w10 = 0, w01 = 0;
  for (auto& [w, p] : r) {
    if (dist(p, {0.0, 0.0}) < 1e-12) w00 = w;
    if (dist(p, {1.0, 0.0}) < 1e-12) w10 = w;
    if (dist(p, {0.0, 1.0}) < 1e-12) w01 = w;
  }
  CHECK(w00 == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(w10 == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(w01 == doctest::Approx(0.25).epsilon(1e-7));

  CHECK_THROWS_WITH_AS(caratheodory_reduce({5.0, 5.0}, {{0.0, 0.0}, {1.0, 0.0}}), "not in hull",
                       std::runtime_error);
}

TEST_CASE("support_value worked examples") {
  CHECK(support_value(mset(2, {{-1.0, 0.0}, {1.0, 0.0}}, {}), {1.0, 0.0}) ==
        doctest::Approx(1.0));
  CHECK(std::isinf(support_value(mset(2, {{0.0, 0.0}}, {{0.0, 1.0}}), {0.0, 1.0})));
  // support of [-1,1] x R in direction (1,0): the vertical recession
  // directions are orthogonal to the probe and stay finite
  CHECK(support_value(mset(2, {{-1.0, 0.0}, {1.0, 0.0}}, {{0.0, 1.0}, {0.0, -1.0}}), {1.0, 0.0}) ==
        doctest::Approx(1.0));
}

TEST_CASE("support_value is positively homogeneous") {
  rng::Key key = rng::make_key(15, 0x2004);
  for (int inst = 0; inst < 50; ++inst) {
    std::vector<Vec> hull{random_point(key, inst, 8, 2), random_point(key, inst, 16, 2)};
    MinkowskiSet s = mset(2, hull, {});
    Vec d = random_point(key, inst, 24, 2);
    if (norm(d) < 1e-9) continue;
    double alpha = 0.5 + 3.0 * rng::u01(key, inst, 40);
    double a = support_value(s, d);
    double b = support_value(s, scaled(d, alpha));
    CHECK(b == doctest::Approx(alpha * a).epsilon(1e-9));
  }
}

TEST_CASE("boundary_generates_cone_check worked examples") {
  CHECK(boundary_generates_cone_check(FiniteCone(2, {{1.0, 0.0}, {0.0, 1.0}}), 16, 0));
  CHECK(boundary_generates_cone_check(FiniteCone(2, {{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}), 16, 0));
  CHECK_THROWS_WITH_AS(boundary_generates_cone_check(FiniteCone(2, {{1.0, 0.0}, {-1.0, 0.0}}), 16, 0),
                       "has lineality", std::runtime_error);
}

TEST_CASE("direction_grid is deterministic and unit length") {
  for (int dim : {1, 2, 3, 4}) {
    auto a = direction_grid(dim, 64);
    auto b = direction_grid(dim, 64);
    REQUIRE(a.size() == 64);
    CHECK(a == b);
    for (const Vec& d : a) CHECK(norm(d) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("extreme_vertices keeps exactly the hull of a 2D cloud") {
  rng::Key key = rng::make_key(16, 0x2005);
  std::vector<Vec> pts;
  for (int i = 0; i < 60; ++i) pts.push_back(random_point(key, 0, 8 * i, 2));
  auto ext = extreme_vertices(pts, 2);
  CHECK(ext.size() < pts.size());
  // every input point is inside the reduced hull; every reduced vertex is
  // outside the hull of the others
  for (const Vec& p : pts)
    CHECK(distance_to_minkowski(p, mset(2, ext, {})).distance < 1e-7);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < ext.size(); ++j)
      if (j != i) others.push_back(ext[j]);
    CHECK(distance_to_minkowski(ext[i], mset(2, others, {})).distance > 1e-9);
  }
}
