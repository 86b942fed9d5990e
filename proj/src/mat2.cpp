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

#include "invgeo/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "invgeo/error.hpp"

namespace invgeo {

Tolerance::Tolerance(double abs_tol, double exact_tol)
    : abs_tol_(abs_tol), exact_tol_(exact_tol) {
  if (!(exact_tol > 0.0) || !(exact_tol <= abs_tol) || !std::isfinite(abs_tol)) {
    std::ostringstream msg;
    msg << "tolerance requires 0 < exact_tol <= abs_tol, got abs_tol=" << abs_tol
        << " exact_tol=" << exact_tol;
    throw Error(ErrorCode::kInvalidTolerance, msg.str());
  }
}

Vec2::Vec2(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::kNonFinite, "Vec2 entries must be finite");
  }
}

Mat2::Mat2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw Error(ErrorCode::kNonFinite, "Mat2 entries must be finite");
  }
}

Mat2 Mat2::inverse(double singular_tol) const {
  const double det = this->det();
  if (std::abs(det) <= singular_tol || det == 0.0) {
    throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
  }
  return Mat2(d_ / det, -b_ / det, -c_ / det, a_ / det);
}

double Mat2::max_norm() const noexcept {
  return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
  return Mat2(lhs.a() + rhs.a(), lhs.b() + rhs.b(), lhs.c() + rhs.c(),
              lhs.d() + rhs.d());
}

Mat2 operator-(const Mat2& lhs, const Mat2& rhs) {
  return Mat2(lhs.a() - rhs.a(), lhs.b() - rhs.b(), lhs.c() - rhs.c(),
              lhs.d() - rhs.d());
}

Mat2 operator-(const Mat2& m) { return Mat2(-m.a(), -m.b(), -m.c(), -m.d()); }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return Mat2(lhs.a() * rhs.a() + lhs.b() * rhs.c(),
              lhs.a() * rhs.b() + lhs.b() * rhs.d(),
              lhs.c() * rhs.a() + lhs.d() * rhs.c(),
              lhs.c() * rhs.b() + lhs.d() * rhs.d());
}

Mat2 operator*(double s, const Mat2& m) {
  return Mat2(s * m.a(), s * m.b(), s * m.c(), s * m.d());
}

Mat2 operator*(const Mat2& m, double s) { return s * m; }

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return Vec2(m.a() * v.x + m.b() * v.y, m.c() * v.x + m.d() * v.y);
}

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) { return lhs * rhs; }

TraceDet trace_det(const Mat2& m) { return {m.trace(), m.det()}; }

bool approx_eq(const Mat2& lhs, const Mat2& rhs, const Tolerance& tol) {
  return max_norm_diff(lhs, rhs) <= tol.abs_tol();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[" << m.a() << ", " << m.b() << "; " << m.c() << ", " << m.d()
            << "]";
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << "(" << v.x << ", " << v.y << ")";
}

}  // namespace invgeo
