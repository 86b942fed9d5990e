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

#ifndef INVGEO_XFORM_HPP_
#define INVGEO_XFORM_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "invgeo/mat2.hpp"
#include "invgeo/roots2.hpp"

namespace invgeo {

// Elementary plane maps used to read involutions geometrically.
//
//   kIdentity            (x, y) -> (x, y)
//   kReflectX            (x, y) -> (x, -y)          reflection in the x-axis
//   kReflectY            (x, y) -> (-x, y)          reflection in the y-axis
//   kPointReflectOrigin  (x, y) -> (-x, -y)
//   kShearX(b)           (x, y) -> (x + b y, y)
//   kShearY(c)           (x, y) -> (x, c x + y)
//   kRotateClockwise(p)  (x, y) -> (x cos p + y sin p, -x sin p + y cos p)
//   kMagnify(r)          (x, y) -> (r x, r y)
//   kShearYAdd(k)        (x, y) -> (0, k x)         additive term only
//
// The shears move a point parallel to an axis by a distance proportional to
// the other coordinate; they are linear, not rigid translations.
enum class TransformKind {
  kIdentity,
  kReflectX,
  kReflectY,
  kPointReflectOrigin,
  kShearX,
  kShearY,
  kRotateClockwise,
  kMagnify,
  kShearYAdd,
};

std::string_view transform_kind_name(TransformKind kind);

struct ElementaryTransform {
  TransformKind kind = TransformKind::kIdentity;
  double param = 0.0;

  bool additive() const noexcept { return kind == TransformKind::kShearYAdd; }
  Mat2 matrix() const;
  // Evaluates the point map directly, without going through matrix().
  Vec2 apply(const Vec2& p) const;
};

// factors[0] * factors[1] * ... * factors[n-1] (+ additive). Factors act on a
// point right to left, matching the written matrix product.
struct Decomposition {
  std::vector<ElementaryTransform> factors;
  std::optional<ElementaryTransform> additive;

  Mat2 recompose() const;
  Vec2 apply(const Vec2& p) const;
};

Vec2 apply(const Mat2& t, const Vec2& p);

// Two-factor products for the triangular families, a single factor for
// +-I2. Throws kWrongDecomposer for the general family.
Decomposition decompose_case(const RootFamily& family);

// X = [a b; (1-a^2)/b -a] with a = rho cos phi, b = rho sin phi:
//   X = (rho I)(reflect x)(rotate clockwise phi) + [0 0; (1-rho^2)/(rho sin phi) 0].
// Throws kNotAnInvolution unless trace 0 / det -1 within abs_tol, and
// kDegenerateAngle when sin phi is numerically zero.
Decomposition decompose_general(const Mat2& x, const Tolerance& tol = {});

// Routes to decompose_case or decompose_general via classify_involution.
Decomposition decompose_involution(const Mat2& x, const Tolerance& tol = {});

// [p, Tp, T^2 p, ..., T^steps p]. Throws kInvalidCount for steps < 1.
std::vector<Vec2> orbit(const Mat2& t, const Vec2& p, int steps);

}  // namespace invgeo

#endif  // INVGEO_XFORM_HPP_
