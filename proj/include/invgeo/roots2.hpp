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

#ifndef INVGEO_ROOTS2_HPP_
#define INVGEO_ROOTS2_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "invgeo/mat2.hpp"

namespace invgeo {

// The seven families of real square roots of I2.
//
//   kIdentity          I2
//   kNegIdentity       -I2
//   kUpperBPlusMinus   [ 1  b;  0 -1]
//   kUpperBMinusPlus   [-1  b;  0  1]
//   kLowerCPlusMinus   [ 1  0;  c -1]
//   kLowerCMinusPlus   [-1  0;  c  1]
//   kGeneral           [ a  b; (1-a^2)/b  -a],  b != 0
enum class FamilyTag {
  kIdentity,
  kNegIdentity,
  kUpperBPlusMinus,
  kUpperBMinusPlus,
  kLowerCPlusMinus,
  kLowerCMinusPlus,
  kGeneral,
};

std::string_view tag_name(FamilyTag tag);
// Throws ErrorCode::kInvalidArgument for an unknown name.
FamilyTag tag_from_name(std::string_view name);

// A family tag plus the parameters that tag uses. Unused slots stay zero.
struct RootFamily {
  FamilyTag tag = FamilyTag::kIdentity;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static RootFamily identity() { return {FamilyTag::kIdentity}; }
  static RootFamily neg_identity() { return {FamilyTag::kNegIdentity}; }
  static RootFamily upper_b(bool plus_minus, double b);
  static RootFamily lower_c(bool plus_minus, double c);
  static RootFamily general(double a, double b);
};

// Parameters of the real square roots of -I2.
struct SkewRootParams {
  double a = 0.0;
  double b = 1.0;
};

// [a, b; (1-a^2)/b, -a]. Throws kDegenerateParameter when |b| <= exact_tol.
Mat2 make_general_root(double a, double b, const Tolerance& tol = {});

// +-I2 and the triangular roots. Throws kWrongConstructor for kGeneral.
Mat2 make_case_root(const RootFamily& family);

// Dispatches on the tag to make_case_root / make_general_root.
Mat2 make_root(const RootFamily& family, const Tolerance& tol = {});

// Recovers the family of an involution. Checks in order: trace != 0 first, then
// c == 0 (upper-b families), then b == 0 (lower-c families), else general.
// The diagonal matrices diag(+-1, -+1) therefore report an upper-b family
// with b = 0. Throws kNotAnInvolution when R^2 != I2 within abs_tol.
RootFamily classify_involution(const Mat2& r, const Tolerance& tol = {});

// [a, b; -(1+a^2)/b, -a]. Throws kDegenerateParameter when |b| <= exact_tol.
Mat2 make_skew_root(const SkewRootParams& p, const Tolerance& tol = {});

bool is_involution(const Mat2& r, const Tolerance& tol = {});
bool is_skew_involution(const Mat2& r, const Tolerance& tol = {});

// ||R^2 - I2||_inf and ||R^2 + I2||_inf.
double involution_residual(const Mat2& r);
double skew_involution_residual(const Mat2& r);

// Smallest |b| the samplers will draw.
inline constexpr double kSamplerMinAbsB = 1e-3;

// n general involutions with (a, b) uniform in [-range, range]^2 and
// |b| >= kSamplerMinAbsB. Deterministic for a given seed on every platform.
// Throws kInvalidCount for n < 1 and kInvalidArgument if range leaves no
// admissible b.
std::vector<Mat2> sample_involutions(int n, std::uint64_t seed, double param_range);

// Same sampling scheme, returning roots of -I2.
std::vector<Mat2> sample_skew_involutions(int n, std::uint64_t seed,
                                          double param_range);

}  // namespace invgeo

#endif  // INVGEO_ROOTS2_HPP_
