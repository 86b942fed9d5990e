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

#ifndef INVGEO_ERROR_HPP_
#define INVGEO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace invgeo {

// Every domain failure in the library is reported through one of these
// codes. The CLI prints code_name() verbatim, so the strings are stable.
enum class ErrorCode {
  kNonFinite,
  kInvalidTolerance,
  kInvalidCount,
  kInvalidArgument,
  kDegenerateParameter,
  kWrongConstructor,
  kNotAnInvolution,
  kNotInHyperplane,
  kAlphaMismatch,
  kNotInLocus,
  kDegenerateSeed,
  kNotUnitVector,
  kNotPythagorean,
  kNotInvertible,
  kSingularMatrix,
  kSingularParameter,
  kComplexEigenvalues,
  kFunctionUndefinedAtEigenvalue,
  kNonPositiveScale,
  kSingularConjugator,
  kNotASquareRoot,
  kWrongDecomposer,
  kDegenerateAngle,
  kMalformedInput,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invgeo

#endif  // INVGEO_ERROR_HPP_
