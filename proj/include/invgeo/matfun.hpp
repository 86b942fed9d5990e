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

#ifndef INVGEO_MATFUN_HPP_
#define INVGEO_MATFUN_HPP_

#include <functional>
#include <string_view>
#include <vector>

#include "invgeo/mat2.hpp"

namespace invgeo {

// Eigenvalues closer than kEigenCoincidence * max(1, |l1|, |l2|) are
// treated as one repeated eigenvalue. The same band decides "eigenvalue is
// zero" when counting square roots.
inline constexpr double kEigenCoincidence = 1e-8;

struct Eigen2 {
  double lambda1;  // lambda1 <= lambda2
  double lambda2;
};

// Real eigenvalues, ascending. Throws kComplexEigenvalues when
// trace^2 - 4 det < -exact_tol.
Eigen2 eigen2(const Mat2& a, const Tolerance& tol = {});

enum class JordanKind { kDistinctDiag, kScalarDiag, kJordanBlock };

std::string_view jordan_kind_name(JordanKind kind);

// A == z * form_matrix() * z^-1.
struct Jordan2 {
  Mat2 z;
  JordanKind kind;
  double lambda1;
  double lambda2;  // equals lambda1 unless kind == kDistinctDiag

  Mat2 form_matrix() const;
  Mat2 reconstruct() const;
};

Jordan2 jordan2(const Mat2& a, const Tolerance& tol = {});

// A scalar function together with its first derivative. Returning NaN means
// "undefined at this point". f_prime may be empty when no Jordan block is
// involved.
struct ScalarFunction {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;

  static ScalarFunction identity();
  static ScalarFunction square();
  // Principal branch; undefined for negative arguments, derivative
  // undefined at zero.
  static ScalarFunction sqrt();
};

// Z diag(f(l1), f(l2)) Z^-1, or Z [f(l), f'(l); 0, f(l)] Z^-1 for a Jordan
// block. Throws kFunctionUndefinedAtEigenvalue when f or f' is NaN/missing
// where needed.
Mat2 matrix_function(const Mat2& a, const ScalarFunction& f,
                     const Tolerance& tol = {});

struct SqrtBranches {
  // Primary roots come first.
  std::vector<Mat2> roots;
  std::size_t primary_count = 0;
  // Set for scalar matrices, whose non-primary roots form a continuum.
  bool infinitely_many = false;
};

SqrtBranches sqrt_branches(const Mat2& a, const Tolerance& tol = {});

enum class CardinalityKind { kZero, kFinite, kInfinite };

struct RootCardinality {
  CardinalityKind kind;
  int count = 0;  // 2 or 4 when kind == kFinite

  friend bool operator==(const RootCardinality&, const RootCardinality&) = default;
};

std::string_view cardinality_name(CardinalityKind kind);

// Number of real X with X^2 == A:
//   lambda I (any real lambda)       infinite
//   0 < l1 < l2                      4
//   0 == l1 < l2, or block l > 0     2
//   anything else                    0
// Throws kComplexEigenvalues like eigen2.
RootCardinality count_real_roots(const Mat2& a, const Tolerance& tol = {});

// sqrt(alpha) R, a square root of alpha A. Throws kNonPositiveScale for
// alpha <= 0 and kNotASquareRoot unless R^2 == A within abs_tol.
Mat2 scaled_roots(const Mat2& a, double alpha, const Mat2& r,
                  const Tolerance& tol = {});

// Zc^-1 R Zc, a square root of Zc^-1 A Zc. Throws kSingularConjugator and
// kNotASquareRoot.
Mat2 conjugated_roots(const Mat2& a, const Mat2& zc, const Mat2& r,
                      const Tolerance& tol = {});

}  // namespace invgeo

#endif  // INVGEO_MATFUN_HPP_
