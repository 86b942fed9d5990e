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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "invgeo/householder.hpp"
#include "invgeo/roots2.hpp"
#include "invgeo/xform.hpp"
#include "support/matchers.hpp"
#include "support/random.hpp"

namespace invgeo {
namespace {

constexpr double kPi = std::numbers::pi;

void ExpectVecNear(const Vec2& p, const Vec2& q, double tol) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
}

TEST(Apply, Examples) {
  ExpectVecNear(apply(-Mat2::identity(), {3, 2}), {-3, -2}, 0.0);
  ExpectVecNear(apply(Mat2(1, 1.5, 0, 1), {2, 4}), {8, 4}, 0.0);
  ExpectVecNear(apply(Mat2::identity(), {0.3, -7}), {0.3, -7}, 0.0);
}

TEST(ElementaryTransform, PointMapsMatchMatrices) {
  testing::Rng rng(97);
  for (int n = 0; n < 100; ++n) {
    const double x = rng.uniform(-5, 5), y = rng.uniform(-5, 5), t = rng.uniform(-3, 3);
    const Vec2 p(x, y);
    struct Case {
      ElementaryTransform tr;
      Vec2 expected;
    };
    const Case cases[] = {
        {{TransformKind::kIdentity, 0}, {x, y}},
        {{TransformKind::kReflectX, 0}, {x, -y}},
        {{TransformKind::kReflectY, 0}, {-x, y}},
        {{TransformKind::kPointReflectOrigin, 0}, {-x, -y}},
        {{TransformKind::kShearX, t}, {x + t * y, y}},
        {{TransformKind::kShearY, t}, {x, t * x + y}},
        {{TransformKind::kRotateClockwise, t},
         {x * std::cos(t) + y * std::sin(t), -x * std::sin(t) + y * std::cos(t)}},
        {{TransformKind::kMagnify, t}, {t * x, t * y}},
        {{TransformKind::kShearYAdd, t}, {0, t * x}},
    };
    for (const Case& c : cases) {
      ExpectVecNear(c.tr.apply(p), c.expected, 1e-13);
      ExpectVecNear(c.tr.matrix() * p, c.expected, 1e-13);
    }
  }
  EXPECT_TRUE((ElementaryTransform{TransformKind::kShearYAdd, 1}).additive());
  EXPECT_FALSE((ElementaryTransform{TransformKind::kShearX, 1}).additive());
}

TEST(DecomposeCase, Examples) {
  Decomposition d = decompose_case(RootFamily::upper_b(true, 2.5));
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].kind, TransformKind::kReflectX);
  EXPECT_EQ(d.factors[1].kind, TransformKind::kShearX);
  EXPECT_EQ(d.factors[1].param, 2.5);
  EXPECT_FALSE(d.additive.has_value());
  EXPECT_EQ(d.recompose(), Mat2(1, 2.5, 0, -1));

  d = decompose_case(RootFamily::lower_c(false, -4));
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].kind, TransformKind::kReflectY);
  EXPECT_EQ(d.factors[1].kind, TransformKind::kShearY);
  EXPECT_EQ(d.recompose(), Mat2(-1, 0, -4, 1));

  d = decompose_case(RootFamily::neg_identity());
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].kind, TransformKind::kPointReflectOrigin);

  d = decompose_case(RootFamily::identity());
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.recompose(), Mat2::identity());

  EXPECT_INVGEO_ERROR(decompose_case(RootFamily::general(0, 1)), ErrorCode::kWrongDecomposer);
}

TEST(DecomposeCase, ProductsMatchConstructors) {
  testing::Rng rng(101);
  for (int n = 0; n < 200; ++n) {
    const double p = rng.uniform(-10, 10);
    for (const RootFamily& f :
         {RootFamily::identity(), RootFamily::neg_identity(), RootFamily::upper_b(true, p),
          RootFamily::upper_b(false, p), RootFamily::lower_c(true, p),
          RootFamily::lower_c(false, p)}) {
      const Decomposition d = decompose_case(f);
      EXPECT_MAT_NEAR(d.recompose(), make_case_root(f), 1e-12);
      const Vec2 q(rng.uniform(-3, 3), rng.uniform(-3, 3));
      ExpectVecNear(d.apply(q), make_case_root(f) * q, 1e-12);
    }
  }
}

TEST(DecomposeGeneral, UnitRadius) {
  const double phi0 = 0.8;
  const Decomposition d = decompose_general(make_general_root(std::cos(phi0), std::sin(phi0)));
  ASSERT_EQ(d.factors.size(), 3u);
  EXPECT_EQ(d.factors[0].kind, TransformKind::kMagnify);
  EXPECT_NEAR(d.factors[0].param, 1.0, 1e-15);
  EXPECT_EQ(d.factors[1].kind, TransformKind::kReflectX);
  EXPECT_EQ(d.factors[2].kind, TransformKind::kRotateClockwise);
  EXPECT_NEAR(d.factors[2].param, phi0, 1e-15);
  ASSERT_TRUE(d.additive.has_value());
  EXPECT_NEAR(d.additive->param, 0.0, 1e-15);
  EXPECT_MAT_NEAR(d.recompose(), householder_from_angle(phi0), 1e-15);
}

TEST(DecomposeGeneral, Examples) {
  Decomposition d = decompose_general(make_general_root(0, 2));
  EXPECT_NEAR(d.factors[0].param, 2.0, 1e-15);
  EXPECT_NEAR(d.factors[2].param, kPi / 2, 1e-15);
  ASSERT_TRUE(d.additive.has_value());
  EXPECT_EQ(d.additive->kind, TransformKind::kShearYAdd);
  EXPECT_NEAR(d.additive->param, -1.5, 1e-15);

  d = decompose_general(Mat2(0, 1, 1, 0));
  EXPECT_NEAR(d.factors[0].param, 1.0, 1e-15);
  EXPECT_NEAR(d.factors[2].param, kPi / 2, 1e-15);
  EXPECT_NEAR(d.additive->param, 0.0, 1e-15);
}

TEST(DecomposeGeneral, RecomposesRandomRoots) {
  for (const Mat2& x : sample_involutions(1000, 103, 10.0)) {
    const Decomposition d = decompose_general(x);
    EXPECT_MAT_NEAR(d.recompose(), x, 1e-9 * std::max(1.0, x.max_norm()));
  }
}

TEST(DecomposeGeneral, UpperFamilyWithNonzeroB) {
  // [1 b; 0 -1] is also make_general_root(1, b).
  const Decomposition d = decompose_general(Mat2(1, 5, 0, -1));
  EXPECT_MAT_NEAR(d.recompose(), Mat2(1, 5, 0, -1), 1e-14);
  EXPECT_NEAR(d.additive->param, -5.0, 1e-14);
}

TEST(DecomposeGeneral, Errors) {
  EXPECT_INVGEO_ERROR(decompose_general(Mat2(1, 0, 5, -1)), ErrorCode::kDegenerateAngle);
  EXPECT_INVGEO_ERROR(decompose_general(Mat2(-1, 0, 5, 1)), ErrorCode::kDegenerateAngle);
  EXPECT_INVGEO_ERROR(decompose_general(Mat2::diag(1, -1)), ErrorCode::kDegenerateAngle);
  EXPECT_INVGEO_ERROR(decompose_general(Mat2::identity()), ErrorCode::kNotAnInvolution);
  EXPECT_INVGEO_ERROR(decompose_general(Mat2(0, 1, -1, 0)), ErrorCode::kNotAnInvolution);
}

TEST(DecomposeInvolution, Routes) {
  EXPECT_EQ(decompose_involution(Mat2(1, 5, 0, -1)).factors.size(), 2u);
  EXPECT_EQ(decompose_involution(Mat2(3, 2, -4, -3)).factors.size(), 3u);
  EXPECT_EQ(decompose_involution(-Mat2::identity()).factors.size(), 1u);
  EXPECT_INVGEO_ERROR(decompose_involution(Mat2(0, 1, 0, 0)), ErrorCode::kNotAnInvolution);
}

TEST(Orbit, Examples) {
  auto o = orbit(householder_from_angle(kPi / 2), {1, 0}, 2);
  ASSERT_EQ(o.size(), 3u);
  ExpectVecNear(o[0], {1, 0}, 0.0);
  ExpectVecNear(o[1], {0, 1}, 1e-15);
  ExpectVecNear(o[2], {1, 0}, 1e-15);

  o = orbit(Mat2::identity(), {2, -1}, 5);
  ASSERT_EQ(o.size(), 6u);
  for (const Vec2& p : o) ExpectVecNear(p, {2, -1}, 0.0);

  o = orbit(make_skew_root({0, 1}), {1, 0}, 4);
  ASSERT_EQ(o.size(), 5u);
  ExpectVecNear(o[2], {-1, 0}, 0.0);
  ExpectVecNear(o[4], {1, 0}, 0.0);
  for (int k = 1; k < 4; ++k) {
    EXPECT_GT(std::hypot(o[k].x - 1, o[k].y), 0.5) << k;
  }

  EXPECT_INVGEO_ERROR(orbit(Mat2::identity(), {0, 0}, 0), ErrorCode::kInvalidCount);
}

TEST(Orbit, Periods) {
  testing::Rng rng(107);
  for (const Mat2& t : sample_involutions(200, 109, 5.0)) {
    const Vec2 p(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const auto o = orbit(t, p, 2);
    ExpectVecNear(o[2], p, 1e-9 * std::max(1.0, t.max_norm() * t.max_norm()));
  }
  for (const Mat2& t : sample_skew_involutions(200, 113, 5.0)) {
    const Vec2 p(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const auto o = orbit(t, p, 4);
    const double tol = 1e-9 * std::max(1.0, std::pow(t.max_norm(), 4));
    ExpectVecNear(o[2], {-p.x, -p.y}, tol);
    ExpectVecNear(o[4], p, tol);
  }
}

}  // namespace
}  // namespace invgeo
