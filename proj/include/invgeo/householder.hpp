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

#ifndef INVGEO_HOUSEHOLDER_HPP_
#define INVGEO_HOUSEHOLDER_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "invgeo/mat2.hpp"

namespace invgeo {

// Unit vector in the plane. Inputs within 1e-6 of unit length are
// renormalized; anything farther throws kNotUnitVector.
class UnitVec2 {
 public:
  static constexpr double kRenormalizeBand = 1e-6;

  UnitVec2(double v1, double v2);

  double v1() const noexcept { return v1_; }
  double v2() const noexcept { return v2_; }

 private:
  double v1_;
  double v2_;
};

// P = I - 2 v v^T.
Mat2 householder_from_unit(const UnitVec2& v);

// [cos phi, sin phi; sin phi, -cos phi], the reflection with normal
// (-sin(phi/2), cos(phi/2)).
Mat2 householder_from_angle(double phi);

// Normal vector of householder_from_angle(phi).
UnitVec2 householder_normal(double phi);

// (1/t) [r s; s -r] with integer numerators kept exact.
struct RationalMat2 {
  std::array<std::int64_t, 4> num;  // a, b, c, d
  std::int64_t den;

  RationalMat2 squared() const;
  // Exact test num == den * I.
  bool is_identity() const;
  Mat2 to_mat2() const;
};

// Throws kNotPythagorean unless r^2 + s^2 == t^2 with t != 0.
RationalMat2 pythagorean_root_exact(std::int64_t r, std::int64_t s, std::int64_t t);
Mat2 pythagorean_root(std::int64_t r, std::int64_t s, std::int64_t t);

// For a symmetric involution other than +-I2 returns the unique phi in
// [0, 2 pi) with R == householder_from_angle(phi); otherwise nullopt.
std::optional<double> symmetric_involutions_are_householder(
    const Mat2& r, const Tolerance& tol = {});

}  // namespace invgeo

#endif  // INVGEO_HOUSEHOLDER_HPP_
