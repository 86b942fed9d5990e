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

#ifndef INVGEO_IO_HPP_
#define INVGEO_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "invgeo/mat2.hpp"
#include "invgeo/quadric.hpp"
#include "invgeo/roots2.hpp"
#include "invgeo/splitquat.hpp"
#include "invgeo/xform.hpp"

namespace invgeo::io {

using nlohmann::json;

// {"a":..,"b":..,"c":..,"d":..}
json to_json(const Mat2& m);
// {"w":..,"x":..,"y":..,"z":..}
json to_json(const SplitQuat& q);
// {"tag":"general","params":{"a":..,"b":..}}; params lists only the slots
// the tag uses.
json to_json(const RootFamily& f);
json to_json(const Decomposition& d);
json to_json(const Vec2& v);

// The parsers throw Error(kMalformedInput) on missing keys, wrong types or
// non-finite numbers.
Mat2 mat_from_json(const json& j);
SplitQuat quat_from_json(const json& j);
RootFamily family_from_json(const json& j);

// Parses text as JSON, or the contents of the file when text starts with '@'.
json parse_document(std::string_view text);

// Shortest representation that round-trips through strtod.
std::string format_double(double v);

// Header "x,y,z,x1,x2,x3,x4,tag".
void write_point_cloud_csv(std::ostream& os, const std::vector<SurfacePoint>& pts);
json point_cloud_json(const std::vector<SurfacePoint>& pts);

// Header "step,x,y".
void write_orbit_csv(std::ostream& os, const std::vector<Vec2>& pts);
json orbit_json(const std::vector<Vec2>& pts);

}  // namespace invgeo::io

#endif  // INVGEO_IO_HPP_
