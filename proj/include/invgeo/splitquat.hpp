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

#ifndef INVGEO_SPLITQUAT_HPP_
#define INVGEO_SPLITQUAT_HPP_

#include <iosfwd>
#include <string_view>

#include "invgeo/mat2.hpp"

namespace invgeo {

// Split-quaternion (coquaternion) w + x i + y j + z k with
//   i^2 = -1,  j^2 = k^2 = ijk = 1,
//   ij = k = -ji,  jk = -i = -kj,  ki = j = -ik.
class SplitQuat {
 public:
  SplitQuat() = default;
  SplitQuat(double w, double x, double y, double z);

  static SplitQuat one() { return {1.0, 0.0, 0.0, 0.0}; }
  static SplitQuat i() { return {0.0, 1.0, 0.0, 0.0}; }
  static SplitQuat j() { return {0.0, 0.0, 1.0, 0.0}; }
  static SplitQuat k() { return {0.0, 0.0, 0.0, 1.0}; }

  double w() const noexcept { return w_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }

  friend bool operator==(const SplitQuat&, const SplitQuat&) = default;

 private:
  double w_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

SplitQuat operator+(const SplitQuat& p, const SplitQuat& q);
SplitQuat operator-(const SplitQuat& p, const SplitQuat& q);
SplitQuat operator-(const SplitQuat& q);
SplitQuat operator*(double s, const SplitQuat& q);
SplitQuat operator*(const SplitQuat& p, const SplitQuat& q);

SplitQuat sq_mul(const SplitQuat& p, const SplitQuat& q);
SplitQuat sq_conj(const SplitQuat& q);
// q q* = w^2 + x^2 - y^2 - z^2.
double sq_modulus(const SplitQuat& q);

// Largest absolute coefficient difference.
double sq_max_diff(const SplitQuat& p, const SplitQuat& q);

enum class CausalClass { kSpacelike, kLightlike, kTimelike };

std::string_view causal_class_name(CausalClass c);

// By sign of q q*, with |q q*| <= exact_tol reported as lightlike.
CausalClass sq_classify(const SplitQuat& q, const Tolerance& tol = {});

// q* / (q q*). Throws kNotInvertible for lightlike q.
SplitQuat sq_inverse(const SplitQuat& q, const Tolerance& tol = {});

// w + x i + y j + z k  <->  [w+z, x+y; y-x, w-z]. A ring isomorphism with
// det(to_matrix(q)) == q q*.
Mat2 to_matrix(const SplitQuat& q);
SplitQuat from_matrix(const Mat2& m);

// i sinh t + (j sin phi + k cos phi) cosh t; squares to 1.
SplitQuat unit_root_identity(double t, double phi);

// i sec t + j tan t sin phi + k tan t cos phi; squares to -1. The sign of
// sec t selects the sheet of x^2 - y^2 - z^2 = 1. Throws kSingularParameter
// when |cos t| <= exact_tol.
SplitQuat unit_root_neg(double t, double phi, const Tolerance& tol = {});

Mat2 root_matrix_identity(double t, double phi);
Mat2 root_matrix_neg(double t, double phi, const Tolerance& tol = {});

enum class RootTarget { kIdentity, kNegIdentity };

// root == coef_h * H(phi) + coef_j * J with J = [0 1; -1 0].
struct RootDecomposition {
  double coef_h;
  Mat2 h;
  double coef_j;
  Mat2 j;

  Mat2 recompose() const { return coef_h * h + coef_j * j; }
};

RootDecomposition decompose_root(double t, double phi, RootTarget which,
                                 const Tolerance& tol = {});

std::ostream& operator<<(std::ostream& os, const SplitQuat& q);

}  // namespace invgeo

#endif  // INVGEO_SPLITQUAT_HPP_
