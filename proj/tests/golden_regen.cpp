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

// Rewrites tests/golden from the current build. Not part of the test run.

#include <fstream>
#include <iostream>

#include "support/golden_cases.hpp"

int main() {
  for (const auto& c : invgeo::testing::golden_cases()) {
    const auto r = invgeo::testing::run_cli(c.args);
    if (r.code != 0) {
      std::cerr << c.name << ": exit " << r.code << " " << r.err;
      return 1;
    }
    std::ofstream(invgeo::testing::golden_path(INVGEO_GOLDEN_DIR, c), std::ios::binary) << r.out;
    std::cout << c.name << "\n";
  }
  return 0;
}
