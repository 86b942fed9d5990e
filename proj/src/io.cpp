// Copyright 2026 The invgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "invgeo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "invgeo/error.hpp"

namespace invgeo::io {
namespace {

// Prints -0.0 as 0.
double clean(double v) { return v + 0.0; }

[[noreturn]] void malformed(const std::string& detail) {
  throw Error(ErrorCode::kMalformedInput, detail);
}

double number_field(const json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key '") + key + "'");
  if (!it->is_number()) malformed(std::string("key '") + key + "' must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) malformed(std::string("key '") + key + "' is not finite");
  return v;
}

double optional_number(const json& params, const char* key) {
  return params.contains(key) ? number_field(params, key) : 0.0;
}

}  // namespace

json to_json(const Mat2& m) {
  return {{"a", clean(m.a())}, {"b", clean(m.b())}, {"c", clean(m.c())},
          {"d", clean(m.d())}};
}

json to_json(const SplitQuat& q) {
  return {{"w", clean(q.w())}, {"x", clean(q.x())}, {"y", clean(q.y())},
          {"z", clean(q.z())}};
}

json to_json(const Vec2& v) { return {{"x", clean(v.x)}, {"y", clean(v.y)}}; }

json to_json(const RootFamily& f) {
  json params = json::object();
  switch (f.tag) {
    case FamilyTag::kIdentity:
    case FamilyTag::kNegIdentity:
      break;
    case FamilyTag::kUpperBPlusMinus:
    case FamilyTag::kUpperBMinusPlus:
      params["b"] = f.b;
      break;
    case FamilyTag::kLowerCPlusMinus:
    case FamilyTag::kLowerCMinusPlus:
      params["c"] = f.c;
      break;
    case FamilyTag::kGeneral:
      params["a"] = f.a;
      params["b"] = f.b;
      break;
  }
  return {{"tag", std::string(tag_name(f.tag))}, {"params", params}};
}

json to_json(const Decomposition& d) {
  auto transform = [](const ElementaryTransform& t) {
    json out = {{"kind", std::string(transform_kind_name(t.kind))},
                {"matrix", to_json(t.matrix())}};
    switch (t.kind) {
      case TransformKind::kShearX:
      case TransformKind::kShearY:
      case TransformKind::kRotateClockwise:
      case TransformKind::kMagnify:
      case TransformKind::kShearYAdd:
        out["param"] = t.param;
        break;
      default:
        break;
    }
    return out;
  };
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(transform(f));
  return {{"factors", factors},
          {"additive", d.additive ? transform(*d.additive) : json(nullptr)},
          {"recomposed", to_json(d.recompose())}};
}

Mat2 mat_from_json(const json& j) {
  return Mat2(number_field(j, "a"), number_field(j, "b"), number_field(j, "c"),
              number_field(j, "d"));
}

SplitQuat quat_from_json(const json& j) {
  return SplitQuat(number_field(j, "w"), number_field(j, "x"), number_field(j, "y"),
                   number_field(j, "z"));
}

RootFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) {
    malformed("root family needs a string 'tag'");
  }
  RootFamily f;
  try {
    f.tag = tag_from_name(j["tag"].get<std::string>());
  } catch (const Error& e) {
    malformed(e.what());
  }
  const json params = j.value("params", json::object());
  if (!params.is_object()) malformed("'params' must be an object");
  f.a = optional_number(params, "a");
  f.b = optional_number(params, "b");
  f.c = optional_number(params, "c");
  return f;
}

json parse_document(std::string_view text) {
  std::string body;
  if (!text.empty() && text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) malformed("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else {
    body = std::string(text);
  }
  json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) malformed("input is not valid JSON");
  return j;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), clean(v));
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

void write_point_cloud_csv(std::ostream& os, const std::vector<SurfacePoint>& pts) {
  os << "x,y,z,x1,x2,x3,x4,tag\n";
  for (const SurfacePoint& p : pts) {
    os << format_double(p.bell.x) << ',' << format_double(p.bell.y) << ','
       << format_double(p.bell.z) << ',' << format_double(p.matrix.a()) << ','
       << format_double(p.matrix.b()) << ',' << format_double(p.matrix.c()) << ','
       << format_double(p.matrix.d()) << ',' << point_tag_name(p.tag) << '\n';
  }
}

json point_cloud_json(const std::vector<SurfacePoint>& pts) {
  json out = json::array();
  for (const SurfacePoint& p : pts) {
    out.push_back({{"x", clean(p.bell.x)},
                   {"y", clean(p.bell.y)},
                   {"z", clean(p.bell.z)},
                   {"matrix", to_json(p.matrix)},
                   {"tag", std::string(point_tag_name(p.tag))}});
  }
  return out;
}

void write_orbit_csv(std::ostream& os, const std::vector<Vec2>& pts) {
  os << "step,x,y\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << i << ',' << format_double(pts[i].x) << ',' << format_double(pts[i].y)
       << '\n';
  }
}

json orbit_json(const std::vector<Vec2>& pts) {
  json out = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back({{"step", i}, {"x", clean(pts[i].x)}, {"y", clean(pts[i].y)}});
  }
  return out;
}

}  // namespace invgeo::io
