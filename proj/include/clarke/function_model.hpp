#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clarke/geometry.hpp"
#include "clarke/vec.hpp"

namespace clarke {

// Oracle bundle for an extended-real-valued function. The value oracle
// returns +infinity outside the domain; the gradient oracle is defined on a
// dense subset of the domain and throws elsewhere. Metadata flags are
// documented claims only -- no algorithm branches on them.
struct ExtendedFunction {
  int dim = 1;
  std::function<double(const Vec&)> value;
  std::function<bool(const Vec&)> in_domain;
  std::function<Vec(const Vec&)> gradient;               // may be empty
  std::function<FiniteCone(const Vec&)> normal_cone;     // may be empty

  struct Meta {
    bool directionally_lipschitzian = true;
    bool vertically_continuous = true;
    bool continuous_on_domain = true;
    bool stratifiable = true;
  } meta;
};

struct ReferenceSubdifferential {
  Vec base_point;
  MinkowskiSet set;
  std::string source;
};

// Used when the reference set is not polyhedral and only membership can be
// answered exactly.
struct MembershipReference {
  Vec base_point;
  std::function<bool(const Vec&)> member;
  std::string source;
};

struct CatalogEntry {
  std::string name;
  ExtendedFunction fn;
  std::vector<ReferenceSubdifferential> references;
  std::vector<MembershipReference> membership_references;
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // throws "unknown function"

inline constexpr double kFdConsistencyTol = 1e-3;
inline constexpr double kFdDefaultStep = 1e-6;

// Central differences at steps h and h/2 with two consistency checks: the
// two central estimates must agree, and so must the one-sided slopes at h
// (without the latter, a kink symmetric about x passes undetected).
// Throws "stencil outside domain" / "nondifferentiable point".
Vec fd_gradient(const ExtendedFunction& f, const Vec& x, double h);

// Ternary Cantor function via base-3 digit scan truncated at `depth`
// digits; error is bounded by 2^-depth.
double cantor_value(double x, int depth);

}  // namespace clarke
