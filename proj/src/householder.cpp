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

#include "invgeo/householder.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "invgeo/error.hpp"
#include "invgeo/roots2.hpp"

namespace invgeo {

UnitVec2::UnitVec2(double v1, double v2) {
  const double norm = std::hypot(v1, v2);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) >= kRenormalizeBand) {
    std::ostringstream msg;
    msg << "vector (" << v1 << ", " << v2 << ") has norm " << norm;
    throw Error(ErrorCode::kNotUnitVector, msg.str());
  }
  v1_ = v1 / norm;
  v2_ = v2 / norm;
}

Mat2 householder_from_unit(const UnitVec2& v) {
  return Mat2(1.0 - 2.0 * v.v1() * v.v1(), -2.0 * v.v1() * v.v2(),
              -2.0 * v.v2() * v.v1(), 1.0 - 2.0 * v.v2() * v.v2());
}

Mat2 householder_from_angle(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Mat2(c, s, s, -c);
}

UnitVec2 householder_normal(double phi) {
  return UnitVec2(-std::sin(phi / 2.0), std::cos(phi / 2.0));
}

RationalMat2 RationalMat2::squared() const {
  const auto& [a, b, c, d] = num;
  return {{a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d}, den * den};
}

bool RationalMat2::is_identity() const {
  return num[0] == den && num[1] == 0 && num[2] == 0 && num[3] == den;
}

Mat2 RationalMat2::to_mat2() const {
  const double t = static_cast<double>(den);
  return Mat2(num[0] / t, num[1] / t, num[2] / t, num[3] / t);
}

RationalMat2 pythagorean_root_exact(std::int64_t r, std::int64_t s, std::int64_t t) {
  // Keep the squares well inside int64.
  constexpr std::int64_t kMaxAbs = 1'000'000'000;
  if (t == 0 || std::abs(r) > kMaxAbs || std::abs(s) > kMaxAbs ||
      std::abs(t) > kMaxAbs || r * r + s * s != t * t) {
    std::ostringstream msg;
    msg << "(" << r << ", " << s << ", " << t << ") is not a Pythagorean triple";
    throw Error(ErrorCode::kNotPythagorean, msg.str());
  }
  return {{r, s, s, -r}, t};
}

Mat2 pythagorean_root(std::int64_t r, std::int64_t s, std::int64_t t) {
  return pythagorean_root_exact(r, s, t).to_mat2();
}

std::optional<double> symmetric_involutions_are_householder(const Mat2& r,
                                                            const Tolerance& tol) {
  if (std::abs(r.b() - r.c()) > tol.abs_tol()) return std::nullopt;
  if (!is_involution(r, tol)) return std::nullopt;
  // +-I2 are the only symmetric involutions with nonzero trace.
  if (std::abs(r.trace()) >= 1.0) return std::nullopt;

  double phi = std::atan2(r.b(), r.a());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  if (!approx_eq(r, householder_from_angle(phi), tol)) return std::nullopt;
  return phi;
}

}  // namespace invgeo
