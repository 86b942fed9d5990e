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

#include "invgeo/quadric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "invgeo/error.hpp"

namespace invgeo {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kGridHalfWidth = 1.5;

double linspace(int i, int n, double half_width) {
  if (n == 1) return 0.0;
  return -half_width + 2.0 * half_width * static_cast<double>(i) /
                           static_cast<double>(n - 1);
}

double azimuth(int j, int n) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
}

void require_counts(int n_u, int n_v) {
  if (n_u < 1 || n_v < 1) {
    throw Error(ErrorCode::kInvalidCount,
                "grid sizes must be >= 1, got " + std::to_string(n_u) + "x" +
                    std::to_string(n_v));
  }
}

SurfacePoint make_point(double x, double y, double z, double alpha, PointTag tag) {
  const BellPoint bell{x, y, z, alpha};
  return {bell, from_bell(bell), tag};
}

Mat2 checked_generator(const Mat2& g, const char* name, const Tolerance& tol) {
  const double scale = g.max_norm();
  if (!(scale > tol.abs_tol())) {
    throw Error(ErrorCode::kDegenerateSeed,
                std::string(name) + " vanishes for this seed; retry with another seed");
  }
  return (1.0 / scale) * g;
}

}  // namespace

std::string_view surface_kind_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kOneSheetHyperboloid: return "one_sheet";
    case SurfaceKind::kRightCircularCone: return "cone";
    case SurfaceKind::kTwoSheetHyperboloid: return "two_sheet";
  }
  return "unknown";
}

std::string_view point_tag_name(PointTag tag) {
  switch (tag) {
    case PointTag::kSurface: return "surface";
    case PointTag::kVertex: return "vertex";
    case PointTag::kGenerator: return "generator";
  }
  return "unknown";
}

double distance_to_scalar(const Mat2& x) {
  return std::max({std::abs(x.a() - x.d()) / 2.0, std::abs(x.b()), std::abs(x.c())});
}

bool in_locus(const Mat2& x, const LocusParams& p, const Tolerance& tol) {
  if (std::abs(x.trace() - p.alpha) > tol.abs_tol()) return false;
  if (std::abs(x.det() - p.beta) > tol.abs_tol()) return false;
  return distance_to_scalar(x) > tol.exact_tol();
}

SurfaceClass classify_quadric(const LocusParams& p, const Tolerance& tol) {
  const double disc = p.alpha * p.alpha - 4.0 * p.beta;
  const double radius_sq = p.alpha * p.alpha / 2.0 - 2.0 * p.beta;
  if (std::abs(disc) <= tol.exact_tol()) {
    return {SurfaceKind::kRightCircularCone, radius_sq};
  }
  return {disc > 0.0 ? SurfaceKind::kOneSheetHyperboloid
                     : SurfaceKind::kTwoSheetHyperboloid,
          radius_sq};
}

std::array<std::array<double, 4>, 3> bell_basis() {
  return {{{kInvSqrt2, 0.0, 0.0, -kInvSqrt2},
           {0.0, kInvSqrt2, kInvSqrt2, 0.0},
           {0.0, -kInvSqrt2, kInvSqrt2, 0.0}}};
}

BellPoint to_bell(const Mat2& x, double alpha, const Tolerance& tol) {
  if (std::abs(x.trace() - alpha) > tol.abs_tol()) {
    std::ostringstream msg;
    msg << "trace " << x.trace() << " does not match alpha " << alpha;
    throw Error(ErrorCode::kNotInHyperplane, msg.str());
  }
  return {kSqrt2 * (x.a() - alpha / 2.0), (x.b() + x.c()) * kInvSqrt2,
          (x.c() - x.b()) * kInvSqrt2, alpha};
}

Mat2 from_bell(const BellPoint& p) {
  return Mat2(p.alpha / 2.0 + p.x * kInvSqrt2, (p.y - p.z) * kInvSqrt2,
              (p.y + p.z) * kInvSqrt2, p.alpha / 2.0 - p.x * kInvSqrt2);
}

double quadric_residual(const BellPoint& p, const LocusParams& lp,
                        const Tolerance& tol) {
  if (std::abs(p.alpha - lp.alpha) > tol.exact_tol()) {
    std::ostringstream msg;
    msg << "point lives in P(" << p.alpha << "), locus in P(" << lp.alpha << ")";
    throw Error(ErrorCode::kAlphaMismatch, msg.str());
  }
  return p.x * p.x + p.y * p.y - p.z * p.z -
         (lp.alpha * lp.alpha / 2.0 - 2.0 * lp.beta);
}

Mat2 principal_section_point(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Mat2(c, s, s, -c);
}

Mat2 principal_axis_point(double s) { return Mat2(0.0, s, -s, 0.0); }

bool on_asymptotic_cone(const Mat2& x, const Tolerance& tol) {
  if (std::abs(x.trace()) > tol.abs_tol()) return false;
  return std::abs(x.a() * x.a() + x.b() * x.c()) <= tol.abs_tol();
}

GeneratorPair generator_directions(const Mat2& a, const Mat2& seed,
                                   const Tolerance& tol) {
  if (!in_locus(a, {0.0, -1.0}, tol)) {
    throw Error(ErrorCode::kNotInLocus,
                "generator base point must be an involution other than +-I2");
  }
  const Mat2 id = Mat2::identity();
  const Mat2 u = (a + id) * seed * (a - id);
  const Mat2 v = (a - id) * seed * (a + id);
  return {checked_generator(u, "U", tol), checked_generator(v, "V", tol)};
}

GeneratorPair generator_directions(const Mat2& a, const Tolerance& tol) {
  const Mat2 seeds[] = {Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0),
                        Mat2(0, 0, 0, 1), Mat2(0, 1, 1, 0), Mat2(1, 1, 1, 1)};
  // Seed maximizing min(|U|, |V|) before normalization.
  const Mat2 id = Mat2::identity();
  const Mat2* best = nullptr;
  double best_scale = 0.0;
  for (const Mat2& seed : seeds) {
    const double scale = std::min(((a + id) * seed * (a - id)).max_norm(),
                                  ((a - id) * seed * (a + id)).max_norm());
    if (scale > best_scale) {
      best_scale = scale;
      best = &seed;
    }
  }
  return generator_directions(a, best ? *best : seeds[0], tol);
}

Mat2 generator_point(const Mat2& a, const Mat2& direction, double t) {
  return a + t * direction;
}

std::vector<SurfacePoint> sample_surface(const LocusParams& p, int n_u, int n_v,
                                         const Tolerance& tol) {
  require_counts(n_u, n_v);
  const SurfaceClass cls = classify_quadric(p, tol);
  const double r = std::sqrt(std::abs(cls.radius_sq));
  std::vector<SurfacePoint> out;
  out.reserve(static_cast<std::size_t>(n_u) * n_v + 1);

  switch (cls.kind) {
    case SurfaceKind::kOneSheetHyperboloid:
      for (int i = 0; i < n_u; ++i) {
        const double u = linspace(i, n_u, kGridHalfWidth);
        for (int j = 0; j < n_v; ++j) {
          const double v = azimuth(j, n_v);
          out.push_back(make_point(r * std::cosh(u) * std::cos(v),
                                   r * std::cosh(u) * std::sin(v),
                                   r * std::sinh(u), p.alpha, PointTag::kSurface));
        }
      }
      break;
    case SurfaceKind::kTwoSheetHyperboloid:
      for (int i = 0; i < n_u; ++i) {
        const double u = linspace(i, n_u, kGridHalfWidth);
        const double sheet = u < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n_v; ++j) {
          const double v = azimuth(j, n_v);
          out.push_back(make_point(r * std::sinh(std::abs(u)) * std::cos(v),
                                   r * std::sinh(std::abs(u)) * std::sin(v),
                                   sheet * r * std::cosh(u), p.alpha,
                                   PointTag::kSurface));
        }
      }
      break;
    case SurfaceKind::kRightCircularCone:
      // The vertex (alpha/2) I is a scalar matrix and so not in S(alpha, beta).
      out.push_back(make_point(0.0, 0.0, 0.0, p.alpha, PointTag::kVertex));
      for (int i = 0; i < n_u; ++i) {
        const double s = n_u == 1 ? kGridHalfWidth : linspace(i, n_u, kGridHalfWidth);
        if (s == 0.0) continue;
        for (int j = 0; j < n_v; ++j) {
          const double v = azimuth(j, n_v);
          out.push_back(make_point(std::abs(s) * std::cos(v),
                                   std::abs(s) * std::sin(v), s, p.alpha,
                                   PointTag::kSurface));
        }
      }
      break;
  }
  return out;
}

std::vector<SurfacePoint> sample_generator_lines(const LocusParams& p, double phi,
                                                 int n, double t_max,
                                                 const Tolerance& tol) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidCount, "generator sample count must be >= 1");
  }
  const SurfaceClass cls = classify_quadric(p, tol);
  if (cls.kind != SurfaceKind::kOneSheetHyperboloid) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator lines exist only on a one-sheet hyperboloid");
  }
  const double scale = std::sqrt(cls.radius_sq / 2.0);
  const Mat2 unit_point = principal_section_point(phi);
  const GeneratorPair dirs = generator_directions(unit_point, tol);
  const Mat2 base = Mat2::scalar(p.alpha / 2.0) + scale * unit_point;

  std::vector<SurfacePoint> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (const Mat2& dir : {dirs.u, dirs.v}) {
    for (int i = 0; i < n; ++i) {
      const Mat2 m = generator_point(base, dir, linspace(i, n, t_max));
      out.push_back({to_bell(m, p.alpha, tol), m, PointTag::kGenerator});
    }
  }
  return out;
}

}  // namespace invgeo
