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

#ifndef INVGEO_QUADRIC_HPP_
#define INVGEO_QUADRIC_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "invgeo/mat2.hpp"

namespace invgeo {

// S(alpha, beta): non-scalar 2x2 matrices with trace alpha and determinant
// beta, i.e. the non-scalar solutions of X^2 - alpha X + beta I = 0.
struct LocusParams {
  double alpha = 0.0;
  double beta = 0.0;
};

// Coordinates of a matrix in the orthonormal Bell frame of the hyperplane
// P(alpha) = {trace == alpha} of R^4, origin (alpha/2, 0, 0, alpha/2).
struct BellPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double alpha = 0.0;
};

enum class SurfaceKind {
  kOneSheetHyperboloid,
  kRightCircularCone,
  kTwoSheetHyperboloid,
};

std::string_view surface_kind_name(SurfaceKind kind);

struct SurfaceClass {
  SurfaceKind kind;
  // Right-hand side of x^2 + y^2 - z^2 = alpha^2/2 - 2 beta.
  double radius_sq;
};

// Two ruling directions through A in S(0,-1):
//   AU = U, UA = -U, U^2 = 0   and   AV = -V, VA = V, V^2 = 0.
struct GeneratorPair {
  Mat2 u;
  Mat2 v;
};

enum class PointTag { kSurface, kVertex, kGenerator };

std::string_view point_tag_name(PointTag tag);

struct SurfacePoint {
  BellPoint bell;
  Mat2 matrix;
  PointTag tag = PointTag::kSurface;
};

// trace == alpha and det == beta within abs_tol, and X is farther than
// exact_tol (max-norm) from every scalar matrix tI.
bool in_locus(const Mat2& x, const LocusParams& p, const Tolerance& tol = {});

// Distance (max-norm) from X to the nearest scalar matrix.
double distance_to_scalar(const Mat2& x);

// Sign of alpha^2 - 4 beta, with |.| <= exact_tol reported as a cone.
SurfaceClass classify_quadric(const LocusParams& p, const Tolerance& tol = {});

// The three frame vectors O'A, O'B, O'C as points of R^4.
std::array<std::array<double, 4>, 3> bell_basis();

// Throws kNotInHyperplane when |trace(X) - alpha| > abs_tol.
BellPoint to_bell(const Mat2& x, double alpha, const Tolerance& tol = {});
Mat2 from_bell(const BellPoint& p);

// x^2 + y^2 - z^2 - (alpha^2/2 - 2 beta). Throws kAlphaMismatch when the
// point lives in a different hyperplane than lp.alpha.
double quadric_residual(const BellPoint& p, const LocusParams& lp,
                        const Tolerance& tol = {});

// Symmetric involution [cos phi, sin phi; sin phi, -cos phi] (Bell z == 0).
Mat2 principal_section_point(double phi);

// Skew-symmetric [0, s; -s, 0] (Bell x == y == 0).
Mat2 principal_axis_point(double s);

// Asymptotic cone of S(0,-1) from its centre: x^2 + y^2 - z^2 = 0 in Bell
// coordinates, i.e. trace(X) == 0 and x1^2 + x2 x3 == 0 (det(X) == 0).
bool on_asymptotic_cone(const Mat2& x, const Tolerance& tol = {});

// U = (A + I) X (A - I), V = (A - I) X (A + I), each scaled to unit
// max-norm. Throws kNotInLocus when A is not in S(0,-1) and kDegenerateSeed
// when either product vanishes for this seed.
GeneratorPair generator_directions(const Mat2& a, const Mat2& seed,
                                   const Tolerance& tol = {});

// Picks the seed among the matrix units, [0 1; 1 0] and the all-ones
// matrix that maximizes min(|U|, |V|) before normalization.
GeneratorPair generator_directions(const Mat2& a, const Tolerance& tol = {});

// A + t D.
Mat2 generator_point(const Mat2& a, const Mat2& direction, double t);

// Grid over the surface S(alpha, beta) in its Bell frame:
//   one sheet   (cosh u cos v, cosh u sin v, sinh u) * r
//   two sheets  (sinh|u| cos v, sinh|u| sin v, sign(u) cosh u) * r
//   cone        (|s| cos v, |s| sin v, s), plus the vertex once, tagged
// with u (or s) spread over [-1.5, 1.5] in n_u steps and v over [0, 2 pi)
// in n_v steps. Throws kInvalidCount for n_u or n_v < 1.
std::vector<SurfacePoint> sample_surface(const LocusParams& p, int n_u, int n_v,
                                         const Tolerance& tol = {});

// Points along both rulings through the principal-section point of a
// one-sheet S(alpha, beta) at angle phi, for t in [-t_max, t_max] (n points
// per ruling). The surface is the image of S(0,-1) under
// Y -> alpha/2 I + sqrt(alpha^2/4 - beta) Y. Throws kInvalidArgument when
// S(alpha, beta) is not a one-sheet hyperboloid.
std::vector<SurfacePoint> sample_generator_lines(const LocusParams& p, double phi,
                                                 int n, double t_max,
                                                 const Tolerance& tol = {});

}  // namespace invgeo

#endif  // INVGEO_QUADRIC_HPP_
