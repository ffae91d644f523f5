#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "clarke/kernels.hpp"
#include "clarke/rng.hpp"

using namespace clarke;

namespace {

std::vector<double> random_array(std::size_t n, std::uint64_t salt) {
  rng::Key key = rng::make_key(0xbeef, 0x1000 + salt);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u = rng::u01(key, i, 0);
    double mag = rng::u01(key, i, 1);
    // mixed magnitudes and signs to make reassociation visible
    v[i] = (u - 0.5) * std::pow(10.0, 12.0 * mag - 6.0);
  }
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("scalar and avx2 backends are bit-identical") {
  const kernels::Ops& s = kernels::scalar_ops();
  const kernels::Ops* v = kernels::avx2_ops();
  if (v == nullptr) {
    MESSAGE("avx2 backend unavailable on this machine; scalar-only");
    return;
  }
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u, 4097u}) {
    auto a = random_array(n, n);
    auto b = random_array(n, n + 1);

    CHECK(same_bits(s.dot(a.data(), b.data(), n), v->dot(a.data(), b.data(), n)));
    CHECK(same_bits(s.sum(a.data(), n), v->sum(a.data(), n)));

    auto y1 = b, y2 = b;
    s.axpy(1.7, a.data(), y1.data(), n);
    v->axpy(1.7, a.data(), y2.data(), n);
    CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);

    auto x1 = a, x2 = a;
    s.scale(-0.3, x1.data(), n);
    v->scale(-0.3, x2.data(), n);
    CHECK(std::memcmp(x1.data(), x2.data(), n * sizeof(double)) == 0);

    auto c1 = b, c2 = b;
    s.sq_accum(a.data(), c1.data(), n);
    v->sq_accum(a.data(), c2.data(), n);
    CHECK(std::memcmp(c1.data(), c2.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("dot agrees with long double reference") {
  auto a = random_array(257, 5);
  auto b = random_array(257, 6);
  long double ref = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) ref += static_cast<long double>(a[i]) * b[i];
  double mine = kernels::dot(a.data(), b.data(), a.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) scale += std::fabs(a[i] * b[i]);
  CHECK(std::fabs(mine - static_cast<double>(ref)) <= 1e-14 * scale);
}

TEST_CASE("active backend is one of the known ones") {
  const char* name = kernels::active_ops().name;
  CHECK((std::strcmp(name, "scalar") == 0 || std::strcmp(name, "avx2") == 0));
}
