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

#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "invgeo/cli.hpp"
#include "invgeo/io.hpp"
#include "support/golden_cases.hpp"
#include "support/matchers.hpp"

namespace invgeo {
namespace {

using testing::run_cli;
using json = nlohmann::json;

json ParseError(const std::string& err) {
  EXPECT_EQ(err.find('\n'), err.size() - 1) << err;
  return json::parse(err);
}

class Golden : public ::testing::TestWithParam<testing::GoldenCase> {};

TEST_P(Golden, MatchesFrozenOutputTwice) {
  const testing::GoldenCase& c = GetParam();
  const std::string expected = testing::read_file(testing::golden_path(INVGEO_GOLDEN_DIR, c));
  ASSERT_FALSE(expected.empty()) << "missing golden file for " << c.name;
  const auto first = run_cli(c.args);
  const auto second = run_cli(c.args);
  EXPECT_EQ(first.code, 0) << first.err;
  EXPECT_TRUE(first.err.empty());
  EXPECT_EQ(first.out, expected);
  EXPECT_EQ(second.out, first.out);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(testing::golden_cases()),
                         [](const ::testing::TestParamInfo<testing::GoldenCase>& info) {
                           return info.param.name;
                         });

TEST(Cli, RootsGeneralMatchesLibrary) {
  const auto r = run_cli({"roots", "--of", "identity", "--a", "0.3", "--b", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(io::mat_from_json(j["matrix"]), make_general_root(0.3, 2));
  EXPECT_EQ(j["family"]["tag"], "general");
  EXPECT_LE(j["residual"].get<double>(), 1e-9);
}

TEST(Cli, ClassifyParams) {
  const auto r = run_cli({"classify", "--alpha", "0", "--beta", "-1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"class":"one_sheet","radius_sq":2.0})"));
}

TEST(Cli, SampleCsvHeader) {
  const auto r = run_cli(
      {"sample", "--alpha", "0", "--beta", "-1", "--nu", "16", "--nv", "64", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("x,y,z,x1,x2,x3,x4,tag\n"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 16 * 64);
}

TEST(Cli, SeedControlsSampling) {
  const auto a = run_cli({"roots", "--of", "identity", "--sample", "3", "--seed", "1"});
  const auto b = run_cli({"roots", "--of", "identity", "--sample", "3", "--seed", "2"});
  const auto a2 = run_cli({"roots", "--of", "identity", "--sample", "3", "--seed", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(a.out, a2.out);
}

TEST(Cli, MalformedJsonIsUsageError) {
  const auto r = run_cli({"decompose", "--matrix", "{not json"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ParseError(r.err)["error"], "malformed_input");
}

TEST(Cli, MissingMatrixKeyIsUsageError) {
  const auto r = run_cli({"orbit", "--matrix", R"({"a":1,"b":0})", "--x", "1", "--y", "0"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(ParseError(r.err)["error"], "malformed_input");
}

TEST(Cli, BadFlagsAreUsageErrors) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"roots", "--a", "x"},
        {"classify", "--alpha", "0"}, {"classify", "--format", "csv", "--alpha", "0", "--beta", "1"},
        {"matfun"}, {"orbit", "--matrix", R"({"a":1,"b":0,"c":0,"d":1})", "--x", "1", "--y", "0",
                     "--steps", "abc"}}) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, cli::kExitUsage) << r.err;
    EXPECT_EQ(ParseError(r.err)["error"], "usage");
  }
}

TEST(Cli, DomainErrorsCarryTheirCode) {
  struct Case {
    std::vector<std::string> args;
    const char* code;
  };
  const Case cases[] = {
      {{"roots", "--of", "identity", "--a", "1", "--b", "0"}, "degenerate_parameter"},
      {{"roots", "--of", "identity", "--sample", "0"}, "invalid_count"},
      {{"quat", "--root", "neg-identity", "--t", "1.5707963267948966", "--phi", "0"},
       "singular_parameter"},
      {{"matfun", "--matrix", R"({"a":0,"b":1,"c":-1,"d":0})"}, "complex_eigenvalues"},
      {{"decompose", "--matrix", R"({"a":0,"b":1,"c":0,"d":0})"}, "not_an_involution"},
      {{"generators", "--matrix", R"({"a":1,"b":0,"c":0,"d":1})"}, "not_in_locus"},
      {{"bell", "--matrix", R"({"a":1,"b":0,"c":0,"d":1})", "--alpha", "0"}, "not_in_hyperplane"},
      {{"orbit", "--matrix", R"({"a":1,"b":0,"c":0,"d":1})", "--x", "0", "--y", "0", "--steps",
        "0"},
       "invalid_count"},
  };
  for (const Case& c : cases) {
    const auto r = run_cli(c.args);
    EXPECT_EQ(r.code, cli::kExitDomainError) << c.args[0] << ": " << r.err;
    EXPECT_EQ(ParseError(r.err)["error"], c.code) << r.err;
  }
}

TEST(Cli, ToleranceFromEnvironment) {
  EXPECT_EQ(cli::tolerance_from({}).abs_tol(), Tolerance().abs_tol());
  const Tolerance t = cli::tolerance_from({std::string("1e-6")});
  EXPECT_EQ(t.abs_tol(), 1e-6);
  EXPECT_EQ(t.exact_tol(), 1e-12);
  EXPECT_EQ(cli::tolerance_from({std::string("1e-14")}).exact_tol(), 1e-14);
  EXPECT_INVGEO_ERROR(cli::tolerance_from({std::string("-1")}), ErrorCode::kInvalidTolerance);
  EXPECT_INVGEO_ERROR(cli::tolerance_from({std::string("abc")}), ErrorCode::kInvalidTolerance);
}

TEST(Cli, ToleranceOverrideChangesVerdict) {
  const std::vector<std::string> args = {"classify", "--matrix",
                                         R"({"a":0,"b":1,"c":1.000001,"d":0})"};
  const json strict = json::parse(run_cli(args).out);
  const json loose = json::parse(run_cli(args, {std::string("1e-4")}).out);
  EXPECT_EQ(strict["involution"], false);
  EXPECT_EQ(loose["involution"], true);
  const auto bad = run_cli(args, {std::string("nope")});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_EQ(ParseError(bad.err)["error"], "invalid_tolerance");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "invgeo_cli_test_out.json";
  const auto r = run_cli({"classify", "--alpha", "0", "--beta", "1", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(testing::read_file(path.string()))["class"], "two_sheet");
  std::filesystem::remove(path);
}

TEST(Cli, MatrixFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "invgeo_cli_test_in.json";
  std::ofstream(path) << R"({"a":1,"b":0,"c":0,"d":4})";
  const auto r = run_cli({"matfun", "--matrix", "@" + path.string(), "--all-branches"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decompose"), std::string::npos);
}

TEST(Cli, BinaryIsDeterministicAcrossProcesses) {
  const std::string cmd = std::string(INVGEO_CLI_PATH) + " generators --phi 0.3";
  auto capture = [&] {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
  };
  const std::string a = capture();
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, capture());
}

}  // namespace
}  // namespace invgeo
