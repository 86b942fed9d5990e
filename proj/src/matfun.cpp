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

#include "invgeo/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "invgeo/error.hpp"

namespace invgeo {
namespace {

double eigen_band(double l1, double l2) {
  return kEigenCoincidence * std::max({1.0, std::abs(l1), std::abs(l2)});
}

// Column vector spanning ker(A - lambda I) for a simple eigenvalue, scaled
// to unit length.
Vec2 eigenvector(const Mat2& a, double lambda) {
  const Vec2 from_row1(a.b(), lambda - a.a());
  const Vec2 from_row2(lambda - a.d(), a.c());
  const double n1 = std::hypot(from_row1.x, from_row1.y);
  const double n2 = std::hypot(from_row2.x, from_row2.y);
  const Vec2& v = n1 >= n2 ? from_row1 : from_row2;
  const double n = std::max(n1, n2);
  return Vec2(v.x / n, v.y / n);
}

Mat2 from_columns(const Vec2& c1, const Vec2& c2) {
  return Mat2(c1.x, c2.x, c1.y, c2.y);
}

Mat2 conjugate(const Mat2& z, const Mat2& inner) { return z * inner * z.inverse(); }

double evaluate(const std::function<double(double)>& fn, double lambda,
                const char* what) {
  const double value =
      fn ? fn(lambda) : std::numeric_limits<double>::quiet_NaN();
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << what << " is undefined at eigenvalue " << lambda;
    throw Error(ErrorCode::kFunctionUndefinedAtEigenvalue, msg.str());
  }
  return value;
}

void require_square_root(const Mat2& a, const Mat2& r, const Tolerance& tol) {
  const double residual = max_norm_diff(r * r, a);
  if (residual > tol.abs_tol()) {
    std::ostringstream msg;
    msg << "R^2 differs from A by " << residual;
    throw Error(ErrorCode::kNotASquareRoot, msg.str());
  }
}

}  // namespace

Eigen2 eigen2(const Mat2& a, const Tolerance& tol) {
  const double mean = a.trace() / 2.0;
  const double half_diff = (a.a() - a.d()) / 2.0;
  // (trace^2 - 4 det) / 4 without the cancellation of the textbook form.
  const double quarter_disc = half_diff * half_diff + a.b() * a.c();
  if (4.0 * quarter_disc < -tol.exact_tol()) {
    std::ostringstream msg;
    msg << "discriminant " << 4.0 * quarter_disc << " < 0: complex eigenvalues";
    throw Error(ErrorCode::kComplexEigenvalues, msg.str());
  }
  const double r = std::sqrt(std::max(quarter_disc, 0.0));
  const double det = a.det();
  double lo = mean - r;
  double hi = mean + r;
  // Recover the smaller-magnitude root from the product to avoid cancellation.
  if (mean >= 0.0 && hi != 0.0) {
    lo = det / hi;
  } else if (mean < 0.0 && lo != 0.0) {
    hi = det / lo;
  }
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

std::string_view jordan_kind_name(JordanKind kind) {
  switch (kind) {
    case JordanKind::kDistinctDiag: return "distinct_diag";
    case JordanKind::kScalarDiag: return "scalar_diag";
    case JordanKind::kJordanBlock: return "jordan_block";
  }
  return "unknown";
}

Mat2 Jordan2::form_matrix() const {
  switch (kind) {
    case JordanKind::kDistinctDiag: return Mat2::diag(lambda1, lambda2);
    case JordanKind::kScalarDiag: return Mat2::scalar(lambda1);
    case JordanKind::kJordanBlock: return Mat2(lambda1, 1.0, 0.0, lambda1);
  }
  return Mat2();
}

Mat2 Jordan2::reconstruct() const { return conjugate(z, form_matrix()); }

Jordan2 jordan2(const Mat2& a, const Tolerance& tol) {
  const Eigen2 ev = eigen2(a, tol);
  if (ev.lambda2 - ev.lambda1 >= eigen_band(ev.lambda1, ev.lambda2)) {
    const Mat2 z = from_columns(eigenvector(a, ev.lambda1), eigenvector(a, ev.lambda2));
    return {z, JordanKind::kDistinctDiag, ev.lambda1, ev.lambda2};
  }

  const double lambda = a.trace() / 2.0;
  const Mat2 nil = a - Mat2::scalar(lambda);
  if (nil.max_norm() <= tol.abs_tol() * std::max(1.0, std::abs(lambda))) {
    return {Mat2::identity(), JordanKind::kScalarDiag, lambda, lambda};
  }
  // Chain z2 -> z1 = (A - lambda I) z2 -> 0, with z2 the unit vector that
  // the nilpotent part moves the most.
  const Vec2 e1(1.0, 0.0);
  const Vec2 e2(0.0, 1.0);
  const Vec2 n1 = nil * e1;
  const Vec2 n2 = nil * e2;
  const bool use_e1 = std::hypot(n1.x, n1.y) >= std::hypot(n2.x, n2.y);
  const Vec2 z2 = use_e1 ? e1 : e2;
  const Vec2 z1 = use_e1 ? n1 : n2;
  return {from_columns(z1, z2), JordanKind::kJordanBlock, lambda, lambda};
}

ScalarFunction ScalarFunction::identity() {
  return {[](double x) { return x; }, [](double) { return 1.0; }};
}

ScalarFunction ScalarFunction::square() {
  return {[](double x) { return x * x; }, [](double x) { return 2.0 * x; }};
}

ScalarFunction ScalarFunction::sqrt() {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  return {[](double x) { return x < 0.0 ? kNaN : std::sqrt(x); },
          [](double x) { return x > 0.0 ? 0.5 / std::sqrt(x) : kNaN; }};
}

Mat2 matrix_function(const Mat2& a, const ScalarFunction& f, const Tolerance& tol) {
  const Jordan2 j = jordan2(a, tol);
  switch (j.kind) {
    case JordanKind::kScalarDiag:
      return Mat2::scalar(evaluate(f.f, j.lambda1, "f"));
    case JordanKind::kDistinctDiag:
      return conjugate(j.z, Mat2::diag(evaluate(f.f, j.lambda1, "f"),
                                       evaluate(f.f, j.lambda2, "f")));
    case JordanKind::kJordanBlock: {
      const double value = evaluate(f.f, j.lambda1, "f");
      const double slope = evaluate(f.f_prime, j.lambda1, "f'");
      return conjugate(j.z, Mat2(value, slope, 0.0, value));
    }
  }
  return Mat2();
}

SqrtBranches sqrt_branches(const Mat2& a, const Tolerance& tol) {
  const Jordan2 j = jordan2(a, tol);
  const double band = eigen_band(j.lambda1, j.lambda2);
  SqrtBranches out;
  switch (j.kind) {
    case JordanKind::kScalarDiag: {
      out.infinitely_many = true;
      const double lambda = j.lambda1;
      if (std::abs(lambda) <= band) {
        out.roots = {Mat2::zero()};
        out.primary_count = 1;
      } else if (lambda > 0.0) {
        const double s = std::sqrt(lambda);
        out.roots = {Mat2::scalar(s), Mat2::scalar(-s)};
        out.primary_count = 2;
      }
      break;
    }
    case JordanKind::kDistinctDiag: {
      if (j.lambda1 < -band) break;
      const double s2 = std::sqrt(j.lambda2);
      if (std::abs(j.lambda1) <= band) {
        out.roots = {conjugate(j.z, Mat2::diag(0.0, s2)),
                     conjugate(j.z, Mat2::diag(0.0, -s2))};
        out.primary_count = 2;
        break;
      }
      const double s1 = std::sqrt(j.lambda1);
      out.roots = {conjugate(j.z, Mat2::diag(s1, s2)),
                   conjugate(j.z, Mat2::diag(-s1, -s2)),
                   conjugate(j.z, Mat2::diag(s1, -s2)),
                   conjugate(j.z, Mat2::diag(-s1, s2))};
      out.primary_count = 2;
      break;
    }
    case JordanKind::kJordanBlock: {
      if (j.lambda1 <= band) break;
      const double s = std::sqrt(j.lambda1);
      const Mat2 block(s, 1.0 / (2.0 * s), 0.0, s);
      out.roots = {conjugate(j.z, block), conjugate(j.z, -block)};
      out.primary_count = 2;
      break;
    }
  }
  return out;
}

std::string_view cardinality_name(CardinalityKind kind) {
  switch (kind) {
    case CardinalityKind::kZero: return "zero";
    case CardinalityKind::kFinite: return "finite";
    case CardinalityKind::kInfinite: return "infinite";
  }
  return "unknown";
}

RootCardinality count_real_roots(const Mat2& a, const Tolerance& tol) {
  const Jordan2 j = jordan2(a, tol);
  const double band = eigen_band(j.lambda1, j.lambda2);
  switch (j.kind) {
    case JordanKind::kScalarDiag:
      return {CardinalityKind::kInfinite, 0};
    case JordanKind::kDistinctDiag:
      if (j.lambda1 < -band) return {CardinalityKind::kZero, 0};
      if (std::abs(j.lambda1) <= band) return {CardinalityKind::kFinite, 2};
      return {CardinalityKind::kFinite, 4};
    case JordanKind::kJordanBlock:
      if (j.lambda1 > band) return {CardinalityKind::kFinite, 2};
      return {CardinalityKind::kZero, 0};
  }
  return {CardinalityKind::kZero, 0};
}

Mat2 scaled_roots(const Mat2& a, double alpha, const Mat2& r, const Tolerance& tol) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "scale must be a positive finite number, got " << alpha;
    throw Error(ErrorCode::kNonPositiveScale, msg.str());
  }
  require_square_root(a, r, tol);
  return std::sqrt(alpha) * r;
}

Mat2 conjugated_roots(const Mat2& a, const Mat2& zc, const Mat2& r,
                      const Tolerance& tol) {
  if (std::abs(zc.det()) <= tol.exact_tol()) {
    throw Error(ErrorCode::kSingularConjugator, "conjugating matrix is singular");
  }
  require_square_root(a, r, tol);
  const Mat2 zinv = zc.inverse();
  return zinv * r * zc;
}

}  // namespace invgeo
