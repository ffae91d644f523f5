#include "clarke/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace clarke {

namespace {

void append_double(std::string& out, double v) {
  if (std::isinf(v)) {
    out += v > 0 ? "\"inf\"" : "\"-inf\"";
    return;
  }
  if (std::isnan(v)) {
    out += "\"nan\"";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad1(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad1;
        append_escaped(out, it.key());
        out += ": ";
        dump(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad1;
        dump(out, el, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::string: append_escaped(out, j.get<std::string>()); return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<long long>()); return;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); return;
    case Json::value_t::number_float: append_double(out, j.get<double>()); return;
    default: out += "null"; return;
  }
}

}  // namespace

std::string dump_report(const Json& j) {
  std::string out;
  dump(out, j, 0);
  out += "\n";
  return out;
}

Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

Json to_json(const MinkowskiSet& set) {
  Json j;
  j["dim"] = set.dim();
  Json hull = Json::array();
  for (const Vec& v : set.hull.vertices) hull.push_back(to_json(v));
  j["hull_vertices"] = hull;
  Json cone = Json::array();
  for (const Vec& g : set.cone.generators) cone.push_back(to_json(g));
  j["cone_generators"] = cone;
  return j;
}

Json to_json(const GradientCloud& cloud) {
  Json j;
  j["base_point"] = to_json(cloud.base_point);
  j["kept"] = cloud.kept_gradients.size();
  j["horizon"] = cloud.horizon_directions.size();
  j["rejected_outside_domain"] = cloud.rejected_outside_domain;
  j["rejected_nondifferentiable"] = cloud.rejected_nondifferentiable;
  return j;
}

std::string points_csv(const std::vector<Vec>& points) {
  std::ostringstream os;
  os << "index";
  if (!points.empty())
    for (std::size_t j = 0; j < points[0].size(); ++j) os << ",coord_" << j;
  os << "\n";
  char buf[40];
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << i;
    for (double x : points[i]) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << ',' << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace clarke
