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

#ifndef INVGEO_MAT2_HPP_
#define INVGEO_MAT2_HPP_

#include <array>
#include <iosfwd>

namespace invgeo {

// Comparison thresholds shared by every module. abs_tol governs residual
// checks such as R^2 == I; exact_tol is the "numerically zero" band used for
// degenerate parameters and round trips. Requires 0 < exact_tol <= abs_tol.
class Tolerance {
 public:
  static constexpr double kDefaultAbs = 1e-9;
  static constexpr double kDefaultExact = 1e-12;

  Tolerance() = default;
  Tolerance(double abs_tol, double exact_tol);

  double abs_tol() const noexcept { return abs_tol_; }
  double exact_tol() const noexcept { return exact_tol_; }

 private:
  double abs_tol_ = kDefaultAbs;
  double exact_tol_ = kDefaultExact;
};

struct Vec2 {
  Vec2() = default;
  Vec2(double x, double y);

  double x = 0.0;
  double y = 0.0;
};

// Real 2x2 matrix [a b; c d]. Under the identification with R^4 the entries
// are (x1, x2, x3, x4) = (a, b, c, d). Entries are always finite: the
// constructor throws ErrorCode::kNonFinite otherwise, and so does any
// arithmetic that overflows.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(double a, double b, double c, double d);

  static Mat2 identity() { return Mat2(1.0, 0.0, 0.0, 1.0); }
  static Mat2 zero() { return Mat2(); }
  static Mat2 scalar(double t) { return Mat2(t, 0.0, 0.0, t); }
  static Mat2 diag(double d1, double d2) { return Mat2(d1, 0.0, 0.0, d2); }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  std::array<double, 4> entries() const noexcept { return {a_, b_, c_, d_}; }

  double trace() const noexcept { return a_ + d_; }
  double det() const noexcept { return a_ * d_ - b_ * c_; }
  Mat2 transpose() const { return Mat2(a_, c_, b_, d_); }

  // Throws ErrorCode::kSingularMatrix when |det| <= singular_tol.
  Mat2 inverse(double singular_tol = 0.0) const;

  double max_norm() const noexcept;

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& m);
Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(double s, const Mat2& m);
Mat2 operator*(const Mat2& m, double s);
Vec2 operator*(const Mat2& m, const Vec2& v);

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);

struct TraceDet {
  double trace;
  double det;
};

TraceDet trace_det(const Mat2& m);

// max |A - B| entry-wise <= tol.abs_tol()
bool approx_eq(const Mat2& lhs, const Mat2& rhs, const Tolerance& tol = {});

inline double max_norm_diff(const Mat2& lhs, const Mat2& rhs) {
  return (lhs - rhs).max_norm();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

}  // namespace invgeo

#endif  // INVGEO_MAT2_HPP_
