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

#include "invgeo/xform.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "invgeo/error.hpp"

namespace invgeo {

std::string_view transform_kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::kIdentity: return "identity";
    case TransformKind::kReflectX: return "reflect_x";
    case TransformKind::kReflectY: return "reflect_y";
    case TransformKind::kPointReflectOrigin: return "point_reflect_origin";
    case TransformKind::kShearX: return "shear_x";
    case TransformKind::kShearY: return "shear_y";
    case TransformKind::kRotateClockwise: return "rotate_clockwise";
    case TransformKind::kMagnify: return "magnify";
    case TransformKind::kShearYAdd: return "shear_y_add";
  }
  return "unknown";
}

Mat2 ElementaryTransform::matrix() const {
  switch (kind) {
    case TransformKind::kIdentity: return Mat2::identity();
    case TransformKind::kReflectX: return Mat2(1, 0, 0, -1);
    case TransformKind::kReflectY: return Mat2(-1, 0, 0, 1);
    case TransformKind::kPointReflectOrigin: return Mat2(-1, 0, 0, -1);
    case TransformKind::kShearX: return Mat2(1, param, 0, 1);
    case TransformKind::kShearY: return Mat2(1, 0, param, 1);
    case TransformKind::kRotateClockwise: {
      const double c = std::cos(param);
      const double s = std::sin(param);
      return Mat2(c, s, -s, c);
    }
    case TransformKind::kMagnify: return Mat2::scalar(param);
    case TransformKind::kShearYAdd: return Mat2(0, 0, param, 0);
  }
  return Mat2();
}

Vec2 ElementaryTransform::apply(const Vec2& p) const {
  switch (kind) {
    case TransformKind::kIdentity: return p;
    case TransformKind::kReflectX: return Vec2(p.x, -p.y);
    case TransformKind::kReflectY: return Vec2(-p.x, p.y);
    case TransformKind::kPointReflectOrigin: return Vec2(-p.x, -p.y);
    case TransformKind::kShearX: return Vec2(p.x + param * p.y, p.y);
    case TransformKind::kShearY: return Vec2(p.x, param * p.x + p.y);
    case TransformKind::kRotateClockwise: {
      const double c = std::cos(param);
      const double s = std::sin(param);
      return Vec2(p.x * c + p.y * s, -p.x * s + p.y * c);
    }
    case TransformKind::kMagnify: return Vec2(param * p.x, param * p.y);
    case TransformKind::kShearYAdd: return Vec2(0.0, param * p.x);
  }
  return p;
}

Mat2 Decomposition::recompose() const {
  Mat2 out = Mat2::identity();
  for (const ElementaryTransform& f : factors) out = out * f.matrix();
  if (additive) out = out + additive->matrix();
  return out;
}

Vec2 Decomposition::apply(const Vec2& p) const {
  Vec2 q = p;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) q = it->apply(q);
  if (additive) {
    const Vec2 extra = additive->apply(p);
    q = Vec2(q.x + extra.x, q.y + extra.y);
  }
  return q;
}

Vec2 apply(const Mat2& t, const Vec2& p) { return t * p; }

Decomposition decompose_case(const RootFamily& family) {
  using K = TransformKind;
  switch (family.tag) {
    case FamilyTag::kIdentity:
      return {{{K::kIdentity}}, std::nullopt};
    case FamilyTag::kNegIdentity:
      return {{{K::kPointReflectOrigin}}, std::nullopt};
    case FamilyTag::kUpperBPlusMinus:
      return {{{K::kReflectX}, {K::kShearX, family.b}}, std::nullopt};
    case FamilyTag::kUpperBMinusPlus:
      return {{{K::kShearX, family.b}, {K::kReflectY}}, std::nullopt};
    case FamilyTag::kLowerCPlusMinus:
      return {{{K::kShearY, family.c}, {K::kReflectX}}, std::nullopt};
    case FamilyTag::kLowerCMinusPlus:
      return {{{K::kReflectY}, {K::kShearY, family.c}}, std::nullopt};
    case FamilyTag::kGeneral:
      break;
  }
  throw Error(ErrorCode::kWrongDecomposer,
              "general roots are decomposed by decompose_general");
}

Decomposition decompose_general(const Mat2& x, const Tolerance& tol) {
  if (std::abs(x.trace()) > tol.abs_tol() || std::abs(x.det() + 1.0) > tol.abs_tol()) {
    std::ostringstream msg;
    msg << "expected trace 0 and det -1, got trace " << x.trace() << " det " << x.det();
    throw Error(ErrorCode::kNotAnInvolution, msg.str());
  }
  const double rho = std::hypot(x.a(), x.b());
  const double phi = std::atan2(x.b(), x.a());
  const double sin_phi = x.b() / rho;
  if (!(std::abs(sin_phi) > tol.exact_tol())) {
    throw Error(ErrorCode::kDegenerateAngle,
                "sin(phi) vanishes; this is a triangular root, use decompose_case");
  }
  using K = TransformKind;
  return {{{K::kMagnify, rho}, {K::kReflectX}, {K::kRotateClockwise, phi}},
          ElementaryTransform{K::kShearYAdd, (1.0 - rho * rho) / (rho * sin_phi)}};
}

Decomposition decompose_involution(const Mat2& x, const Tolerance& tol) {
  const RootFamily family = classify_involution(x, tol);
  if (family.tag == FamilyTag::kGeneral) return decompose_general(x, tol);
  return decompose_case(family);
}

std::vector<Vec2> orbit(const Mat2& t, const Vec2& p, int steps) {
  if (steps < 1) {
    throw Error(ErrorCode::kInvalidCount,
                "orbit steps must be >= 1, got " + std::to_string(steps));
  }
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(p);
  for (int i = 0; i < steps; ++i) out.push_back(t * out.back());
  return out;
}

}  // namespace invgeo
