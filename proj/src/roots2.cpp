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

#include "invgeo/roots2.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "invgeo/error.hpp"

namespace invgeo {
namespace {

// Uniform double in [lo, hi) built from the raw 64-bit engine output so the
// sequence does not depend on the standard library's distribution code.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

template <typename MakeFn>
std::vector<Mat2> sample_roots(int n, std::uint64_t seed, double range,
                               MakeFn make) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidCount, "sample count must be >= 1, got " +
                                              std::to_string(n));
  }
  if (!std::isfinite(range) || range < kSamplerMinAbsB) {
    throw Error(ErrorCode::kInvalidArgument,
                "param_range must be finite and >= 1e-3");
  }
  std::mt19937_64 rng(seed);
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    const double a = uniform(rng, -range, range);
    const double b = uniform(rng, -range, range);
    if (std::abs(b) < kSamplerMinAbsB) continue;
    out.push_back(make(a, b));
  }
  return out;
}

void require_nonzero_b(double b, const Tolerance& tol, const char* what) {
  if (!(std::abs(b) > tol.exact_tol())) {
    std::ostringstream msg;
    msg << what << ": b=" << b << " is numerically zero";
    throw Error(ErrorCode::kDegenerateParameter, msg.str());
  }
}

}  // namespace

std::string_view tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kIdentity: return "identity";
    case FamilyTag::kNegIdentity: return "neg_identity";
    case FamilyTag::kUpperBPlusMinus: return "upper_b_plus_minus";
    case FamilyTag::kUpperBMinusPlus: return "upper_b_minus_plus";
    case FamilyTag::kLowerCPlusMinus: return "lower_c_plus_minus";
    case FamilyTag::kLowerCMinusPlus: return "lower_c_minus_plus";
    case FamilyTag::kGeneral: return "general";
  }
  return "unknown";
}

FamilyTag tag_from_name(std::string_view name) {
  for (FamilyTag t : {FamilyTag::kIdentity, FamilyTag::kNegIdentity,
                      FamilyTag::kUpperBPlusMinus, FamilyTag::kUpperBMinusPlus,
                      FamilyTag::kLowerCPlusMinus, FamilyTag::kLowerCMinusPlus,
                      FamilyTag::kGeneral}) {
    if (tag_name(t) == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown root family '" + std::string(name) + "'");
}

RootFamily RootFamily::upper_b(bool plus_minus, double b) {
  return {plus_minus ? FamilyTag::kUpperBPlusMinus : FamilyTag::kUpperBMinusPlus,
          0.0, b, 0.0};
}

RootFamily RootFamily::lower_c(bool plus_minus, double c) {
  return {plus_minus ? FamilyTag::kLowerCPlusMinus : FamilyTag::kLowerCMinusPlus,
          0.0, 0.0, c};
}

RootFamily RootFamily::general(double a, double b) {
  return {FamilyTag::kGeneral, a, b, 0.0};
}

Mat2 make_general_root(double a, double b, const Tolerance& tol) {
  require_nonzero_b(b, tol, "make_general_root");
  return Mat2(a, b, (1.0 - a * a) / b, -a);
}

Mat2 make_case_root(const RootFamily& family) {
  switch (family.tag) {
    case FamilyTag::kIdentity: return Mat2::identity();
    case FamilyTag::kNegIdentity: return -Mat2::identity();
    case FamilyTag::kUpperBPlusMinus: return Mat2(1.0, family.b, 0.0, -1.0);
    case FamilyTag::kUpperBMinusPlus: return Mat2(-1.0, family.b, 0.0, 1.0);
    case FamilyTag::kLowerCPlusMinus: return Mat2(1.0, 0.0, family.c, -1.0);
    case FamilyTag::kLowerCMinusPlus: return Mat2(-1.0, 0.0, family.c, 1.0);
    case FamilyTag::kGeneral: break;
  }
  throw Error(ErrorCode::kWrongConstructor,
              "make_case_root does not build the general family; use "
              "make_general_root");
}

Mat2 make_root(const RootFamily& family, const Tolerance& tol) {
  if (family.tag == FamilyTag::kGeneral) {
    return make_general_root(family.a, family.b, tol);
  }
  return make_case_root(family);
}

RootFamily classify_involution(const Mat2& r, const Tolerance& tol) {
  const double residual = involution_residual(r);
  if (residual > tol.abs_tol()) {
    std::ostringstream msg;
    msg << "R^2 differs from I2 by " << residual;
    throw Error(ErrorCode::kNotAnInvolution, msg.str());
  }
  // Involution traces are -2, 0 or 2.
  const double tr = r.trace();
  if (tr >= 1.0) return RootFamily::identity();
  if (tr <= -1.0) return RootFamily::neg_identity();

  const bool plus_minus = r.a() > 0.0;
  if (std::abs(r.c()) <= tol.exact_tol() && std::abs(std::abs(r.a()) - 1.0) <= tol.abs_tol()) {
    return RootFamily::upper_b(plus_minus, r.b());
  }
  if (std::abs(r.b()) <= tol.exact_tol() && std::abs(std::abs(r.a()) - 1.0) <= tol.abs_tol()) {
    return RootFamily::lower_c(plus_minus, r.c());
  }
  return RootFamily::general(r.a(), r.b());
}

Mat2 make_skew_root(const SkewRootParams& p, const Tolerance& tol) {
  require_nonzero_b(p.b, tol, "make_skew_root");
  return Mat2(p.a, p.b, -(1.0 + p.a * p.a) / p.b, -p.a);
}

double involution_residual(const Mat2& r) {
  return max_norm_diff(r * r, Mat2::identity());
}

double skew_involution_residual(const Mat2& r) {
  return max_norm_diff(r * r, -Mat2::identity());
}

bool is_involution(const Mat2& r, const Tolerance& tol) {
  return involution_residual(r) <= tol.abs_tol();
}

bool is_skew_involution(const Mat2& r, const Tolerance& tol) {
  return skew_involution_residual(r) <= tol.abs_tol();
}

std::vector<Mat2> sample_involutions(int n, std::uint64_t seed,
                                     double param_range) {
  return sample_roots(n, seed, param_range,
                      [](double a, double b) { return make_general_root(a, b); });
}

std::vector<Mat2> sample_skew_involutions(int n, std::uint64_t seed,
                                          double param_range) {
  return sample_roots(n, seed, param_range, [](double a, double b) {
    return make_skew_root({a, b});
  });
}

}  // namespace invgeo
