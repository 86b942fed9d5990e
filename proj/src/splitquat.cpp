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

#include "invgeo/splitquat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "invgeo/error.hpp"
#include "invgeo/householder.hpp"

namespace invgeo {

SplitQuat::SplitQuat(double w, double x, double y, double z)
    : w_(w), x_(x), y_(y), z_(z) {
  if (!std::isfinite(w) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(z)) {
    throw Error(ErrorCode::kNonFinite, "SplitQuat coefficients must be finite");
  }
}

SplitQuat operator+(const SplitQuat& p, const SplitQuat& q) {
  return {p.w() + q.w(), p.x() + q.x(), p.y() + q.y(), p.z() + q.z()};
}

SplitQuat operator-(const SplitQuat& p, const SplitQuat& q) {
  return {p.w() - q.w(), p.x() - q.x(), p.y() - q.y(), p.z() - q.z()};
}

SplitQuat operator-(const SplitQuat& q) { return {-q.w(), -q.x(), -q.y(), -q.z()}; }

SplitQuat operator*(double s, const SplitQuat& q) {
  return {s * q.w(), s * q.x(), s * q.y(), s * q.z()};
}

SplitQuat operator*(const SplitQuat& p, const SplitQuat& q) {
  return {p.w() * q.w() - p.x() * q.x() + p.y() * q.y() + p.z() * q.z(),
          p.w() * q.x() + p.x() * q.w() - p.y() * q.z() + p.z() * q.y(),
          p.w() * q.y() + p.y() * q.w() + p.z() * q.x() - p.x() * q.z(),
          p.w() * q.z() + p.z() * q.w() + p.x() * q.y() - p.y() * q.x()};
}

SplitQuat sq_mul(const SplitQuat& p, const SplitQuat& q) { return p * q; }

SplitQuat sq_conj(const SplitQuat& q) { return {q.w(), -q.x(), -q.y(), -q.z()}; }

double sq_modulus(const SplitQuat& q) {
  return q.w() * q.w() + q.x() * q.x() - q.y() * q.y() - q.z() * q.z();
}

double sq_max_diff(const SplitQuat& p, const SplitQuat& q) {
  return std::max({std::abs(p.w() - q.w()), std::abs(p.x() - q.x()),
                   std::abs(p.y() - q.y()), std::abs(p.z() - q.z())});
}

std::string_view causal_class_name(CausalClass c) {
  switch (c) {
    case CausalClass::kSpacelike: return "spacelike";
    case CausalClass::kLightlike: return "lightlike";
    case CausalClass::kTimelike: return "timelike";
  }
  return "unknown";
}

CausalClass sq_classify(const SplitQuat& q, const Tolerance& tol) {
  const double m = sq_modulus(q);
  if (std::abs(m) <= tol.exact_tol()) return CausalClass::kLightlike;
  return m < 0.0 ? CausalClass::kSpacelike : CausalClass::kTimelike;
}

SplitQuat sq_inverse(const SplitQuat& q, const Tolerance& tol) {
  const double m = sq_modulus(q);
  if (std::abs(m) <= tol.exact_tol()) {
    throw Error(ErrorCode::kNotInvertible,
                "lightlike split-quaternion (q q* = 0) has no inverse");
  }
  return (1.0 / m) * sq_conj(q);
}

Mat2 to_matrix(const SplitQuat& q) {
  return Mat2(q.w() + q.z(), q.x() + q.y(), q.y() - q.x(), q.w() - q.z());
}

SplitQuat from_matrix(const Mat2& m) {
  return {(m.a() + m.d()) / 2.0, (m.b() - m.c()) / 2.0, (m.b() + m.c()) / 2.0,
          (m.a() - m.d()) / 2.0};
}

SplitQuat unit_root_identity(double t, double phi) {
  const double ch = std::cosh(t);
  return {0.0, std::sinh(t), ch * std::sin(phi), ch * std::cos(phi)};
}

SplitQuat unit_root_neg(double t, double phi, const Tolerance& tol) {
  const double c = std::cos(t);
  if (std::abs(c) <= tol.exact_tol()) {
    std::ostringstream msg;
    msg << "sec t is unbounded at t=" << t;
    throw Error(ErrorCode::kSingularParameter, msg.str());
  }
  const double tn = std::tan(t);
  return {0.0, 1.0 / c, tn * std::sin(phi), tn * std::cos(phi)};
}

Mat2 root_matrix_identity(double t, double phi) {
  return to_matrix(unit_root_identity(t, phi));
}

Mat2 root_matrix_neg(double t, double phi, const Tolerance& tol) {
  return to_matrix(unit_root_neg(t, phi, tol));
}

RootDecomposition decompose_root(double t, double phi, RootTarget which,
                                 const Tolerance& tol) {
  const Mat2 h = householder_from_angle(phi);
  const Mat2 j(0.0, 1.0, -1.0, 0.0);
  if (which == RootTarget::kIdentity) {
    return {std::cosh(t), h, std::sinh(t), j};
  }
  const double c = std::cos(t);
  if (std::abs(c) <= tol.exact_tol()) {
    std::ostringstream msg;
    msg << "sec t is unbounded at t=" << t;
    throw Error(ErrorCode::kSingularParameter, msg.str());
  }
  return {std::tan(t), h, 1.0 / c, j};
}

std::ostream& operator<<(std::ostream& os, const SplitQuat& q) {
  return os << q.w() << " + " << q.x() << "i + " << q.y() << "j + " << q.z() << "k";
}

}  // namespace invgeo
