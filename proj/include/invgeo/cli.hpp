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

#ifndef INVGEO_CLI_HPP_
#define INVGEO_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "invgeo/mat2.hpp"

namespace invgeo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsage = 2,
};

struct Environment {
  // Value of INVGEO_TOL, if set. Overrides the default abs_tol.
  std::optional<std::string> tol_override;

  static Environment from_process();
};

// Tolerance derived from the environment. Throws Error(kInvalidTolerance)
// for an unparsable or non-positive override.
Tolerance tolerance_from(const Environment& env);

// Runs one command line (without the program name). The result document
// goes to `out` (or the --output file); failures print
// {"error": code, "detail": ...} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace invgeo::cli

#endif  // INVGEO_CLI_HPP_
