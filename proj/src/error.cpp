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

#include "invgeo/error.hpp"

namespace invgeo {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "non_finite";
    case ErrorCode::kInvalidTolerance: return "invalid_tolerance";
    case ErrorCode::kInvalidCount: return "invalid_count";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDegenerateParameter: return "degenerate_parameter";
    case ErrorCode::kWrongConstructor: return "wrong_constructor";
    case ErrorCode::kNotAnInvolution: return "not_an_involution";
    case ErrorCode::kNotInHyperplane: return "not_in_hyperplane";
    case ErrorCode::kAlphaMismatch: return "alpha_mismatch";
    case ErrorCode::kNotInLocus: return "not_in_locus";
    case ErrorCode::kDegenerateSeed: return "degenerate_seed";
    case ErrorCode::kNotUnitVector: return "not_unit_vector";
    case ErrorCode::kNotPythagorean: return "not_pythagorean";
    case ErrorCode::kNotInvertible: return "not_invertible";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kSingularParameter: return "singular_parameter";
    case ErrorCode::kComplexEigenvalues: return "complex_eigenvalues";
    case ErrorCode::kFunctionUndefinedAtEigenvalue:
      return "function_undefined_at_eigenvalue";
    case ErrorCode::kNonPositiveScale: return "non_positive_scale";
    case ErrorCode::kSingularConjugator: return "singular_conjugator";
    case ErrorCode::kNotASquareRoot: return "not_a_square_root";
    case ErrorCode::kWrongDecomposer: return "wrong_decomposer";
    case ErrorCode::kDegenerateAngle: return "degenerate_angle";
    case ErrorCode::kMalformedInput: return "malformed_input";
  }
  return "unknown";
}

}  // namespace invgeo
