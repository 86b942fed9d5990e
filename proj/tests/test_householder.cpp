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
#include "support/matchers.hpp"
#include "support/random.hpp"

namespace invgeo {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(UnitVec2, RenormalizesOrRejects) {
  const UnitVec2 v(0.6 * (1 + 1e-8), 0.8 * (1 + 1e-8));
  EXPECT_NEAR(std::hypot(v.v1(), v.v2()), 1.0, 1e-16);
  EXPECT_INVGEO_ERROR(UnitVec2(1.0, 1.0), ErrorCode::kNotUnitVector);
  EXPECT_INVGEO_ERROR(UnitVec2(0.0, 0.0), ErrorCode::kNotUnitVector);
}

TEST(Householder, FromUnitExamples) {
  EXPECT_EQ(householder_from_unit(UnitVec2(0, 1)), Mat2(1, 0, 0, -1));
  const double r = 1 / std::numbers::sqrt2;
  EXPECT_MAT_NEAR(householder_from_unit(UnitVec2(r, -r)), Mat2(0, 1, 1, 0), 1e-15);
  for (double phi = 0; phi < 2 * kPi; phi += 0.25) {
    const Mat2 expected(std::cos(phi), std::sin(phi), std::sin(phi), -std::cos(phi));
    EXPECT_MAT_NEAR(householder_from_unit(UnitVec2(-std::sin(phi / 2), std::cos(phi / 2))),
                    expected, 1e-15);
    EXPECT_MAT_NEAR(householder_from_angle(phi), expected, 0.0);
  }
}

TEST(Householder, FromAngleExamples) {
  EXPECT_EQ(householder_from_angle(0), Mat2(1, 0, 0, -1));
  EXPECT_MAT_NEAR(householder_from_angle(kPi), Mat2(-1, 0, 0, 1), 1e-15);
  EXPECT_MAT_NEAR(householder_from_angle(kPi / 2), Mat2(0, 1, 1, 0), 1e-15);
}

TEST(Householder, ReflectionProperties) {
  for (int k = 0; k < 64; ++k) {
    const double phi = 2 * kPi * k / 64;
    const Mat2 h = householder_from_angle(phi);
    EXPECT_MAT_NEAR(h * h, Mat2::identity(), 1e-12);
    EXPECT_EQ(h, h.transpose());
    EXPECT_NEAR(h.det(), -1.0, 1e-12);
    const UnitVec2 n = householder_normal(phi);
    const Vec2 hv = h * Vec2(n.v1(), n.v2());
    EXPECT_NEAR(hv.x, -n.v1(), 1e-12);
    EXPECT_NEAR(hv.y, -n.v2(), 1e-12);
    // Vectors orthogonal to the normal are fixed.
    const Vec2 fixed = h * Vec2(n.v2(), -n.v1());
    EXPECT_NEAR(fixed.x, n.v2(), 1e-12);
    EXPECT_NEAR(fixed.y, -n.v1(), 1e-12);
  }
}

TEST(Pythagorean, ExactRoots) {
  const RationalMat2 r = pythagorean_root_exact(3, 4, 5);
  EXPECT_EQ(r.den, 5);
  EXPECT_EQ(r.num, (std::array<std::int64_t, 4>{3, 4, 4, -3}));
  EXPECT_TRUE(r.squared().is_identity());
  EXPECT_TRUE(pythagorean_root_exact(5, 12, 13).squared().is_identity());
  EXPECT_TRUE(pythagorean_root_exact(-20, 21, 29).squared().is_identity());
  EXPECT_MAT_NEAR(pythagorean_root(3, 4, 5), Mat2(0.6, 0.8, 0.8, -0.6), 1e-16);
  EXPECT_MAT_NEAR(pythagorean_root(5, 12, 13), Mat2(5.0 / 13, 12.0 / 13, 12.0 / 13, -5.0 / 13),
                  1e-16);
}

TEST(Pythagorean, Rejects) {
  EXPECT_INVGEO_ERROR(pythagorean_root(1, 1, 2), ErrorCode::kNotPythagorean);
  EXPECT_INVGEO_ERROR(pythagorean_root(0, 0, 0), ErrorCode::kNotPythagorean);
  EXPECT_INVGEO_ERROR(pythagorean_root_exact(3, 4, 6), ErrorCode::kNotPythagorean);
}

TEST(Pythagorean, NonIdentitySquareDetected) {
  RationalMat2 bad{{1, 1, 0, 1}, 1};
  EXPECT_FALSE(bad.squared().is_identity());
}

TEST(Recognition, Examples) {
  const auto phi = symmetric_involutions_are_householder(Mat2(0, 1, 1, 0));
  ASSERT_TRUE(phi.has_value());
  EXPECT_NEAR(*phi, kPi / 2, 1e-15);
  EXPECT_FALSE(symmetric_involutions_are_householder(Mat2::identity()).has_value());
  EXPECT_FALSE(symmetric_involutions_are_householder(-Mat2::identity()).has_value());
  EXPECT_FALSE(symmetric_involutions_are_householder(Mat2(1, 2, 0, -1)).has_value());
  EXPECT_FALSE(symmetric_involutions_are_householder(Mat2(2, 0, 0, 2)).has_value());
}

TEST(Recognition, RecoversAngle) {
  testing::Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const double phi = rng.uniform(0, 2 * kPi);
    const auto back = symmetric_involutions_are_householder(householder_from_angle(phi));
    ASSERT_TRUE(back.has_value());
    EXPECT_NEAR(*back, phi, 1e-12);
    EXPECT_GE(*back, 0.0);
    EXPECT_LT(*back, 2 * kPi);
  }
}

TEST(Recognition, EverySymmetricGeneralRootIsHouseholder) {
  // [a b; (1-a^2)/b -a] is symmetric iff a^2 + b^2 = 1.
  for (double phi = 0.05; phi < kPi; phi += 0.1) {
    const Mat2 r = make_general_root(std::cos(phi), std::sin(phi));
    EXPECT_TRUE(symmetric_involutions_are_householder(r).has_value());
  }
  EXPECT_FALSE(symmetric_involutions_are_householder(make_general_root(3, 2)).has_value());
}

}  // namespace
}  // namespace invgeo
