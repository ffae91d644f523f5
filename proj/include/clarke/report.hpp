#pragma once

#include <string>

#include <json.hpp>

#include "clarke/geometry.hpp"
#include "clarke/sampler.hpp"
#include "clarke/vec.hpp"

namespace clarke {

// Reports preserve key insertion order and serialize every double with 17
// significant digits, so identical runs produce byte-identical files.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "clarke-kit-report/1";

std::string dump_report(const Json& j);

Json to_json(const Vec& v);
Json to_json(const MinkowskiSet& set);
Json to_json(const GradientCloud& cloud);

// "index,coord_0,...,coord_{n-1}" rows.
std::string points_csv(const std::vector<Vec>& points);

}  // namespace clarke
