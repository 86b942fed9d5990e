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

#include "invgeo/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "invgeo/error.hpp"
#include "invgeo/householder.hpp"
#include "invgeo/io.hpp"
#include "invgeo/matfun.hpp"
#include "invgeo/quadric.hpp"
#include "invgeo/roots2.hpp"
#include "invgeo/splitquat.hpp"
#include "invgeo/xform.hpp"

namespace invgeo::cli {
namespace {

using io::json;
using io::to_json;

// Usage problems that CLI11 cannot detect on its own (conflicting or
// missing option combinations).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, CommonOptions& common, bool allow_csv) {
  sub->add_option("--output,-o", common.output, "Write the document to this file");
  sub->add_option("--seed", common.seed, "Seed for every sampled quantity");
  auto* fmt = sub->add_option("--format", common.format, "Output format");
  if (allow_csv) {
    fmt->check(CLI::IsMember({"json", "csv"}));
  } else {
    fmt->check(CLI::IsMember({"json"}));
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Mat2 matrix_arg(const std::string& text) {
  return io::mat_from_json(io::parse_document(text));
}

// ---- roots -----------------------------------------------------------------

struct RootsOptions {
  std::string of = "identity";
  std::string family;
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  std::optional<int> sample;
  double range = 10.0;
};

std::string run_roots(const RootsOptions& o, const CommonOptions& common,
                      const Tolerance& tol) {
  const bool identity = o.of == "identity";
  if (!identity && !o.family.empty()) {
    throw UsageError("--family applies only to --of identity");
  }
  json doc = {{"target", identity ? "identity" : "neg_identity"}};
  if (o.sample) {
    const auto roots = identity ? sample_involutions(*o.sample, common.seed, o.range)
                                : sample_skew_involutions(*o.sample, common.seed, o.range);
    json list = json::array();
    for (const Mat2& r : roots) {
      list.push_back({{"matrix", to_json(r)},
                      {"residual", identity ? involution_residual(r)
                                            : skew_involution_residual(r)}});
    }
    doc["seed"] = common.seed;
    doc["range"] = o.range;
    doc["roots"] = list;
    return dump(doc);
  }
  if (identity) {
    RootFamily family;
    family.tag = tag_from_name(o.family.empty() ? "general" : o.family);
    family.a = o.a;
    family.b = o.b;
    family.c = o.c;
    const Mat2 r = make_root(family, tol);
    doc["family"] = to_json(family);
    doc["matrix"] = to_json(r);
    doc["residual"] = involution_residual(r);
  } else {
    const Mat2 r = make_skew_root({o.a, o.b}, tol);
    doc["params"] = {{"a", o.a}, {"b", o.b}};
    doc["matrix"] = to_json(r);
    doc["residual"] = skew_involution_residual(r);
  }
  return dump(doc);
}

// ---- classify --------------------------------------------------------------

struct ClassifyOptions {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string matrix;
};

std::string run_classify(const ClassifyOptions& o, const Tolerance& tol) {
  if (o.matrix.empty()) {
    if (!o.alpha || !o.beta) {
      throw UsageError("classify needs --alpha and --beta, or --matrix");
    }
    const SurfaceClass cls = classify_quadric({*o.alpha, *o.beta}, tol);
    return dump({{"class", std::string(surface_kind_name(cls.kind))},
                 {"radius_sq", cls.radius_sq}});
  }
  if (o.alpha || o.beta) {
    throw UsageError("--matrix cannot be combined with --alpha/--beta");
  }
  const Mat2 m = matrix_arg(o.matrix);
  const LocusParams locus{m.trace(), m.det()};
  const SurfaceClass cls = classify_quadric(locus, tol);
  json doc = {{"matrix", to_json(m)},
              {"trace", locus.alpha},
              {"det", locus.beta},
              {"involution", is_involution(m, tol)},
              {"skew_involution", is_skew_involution(m, tol)},
              {"locus",
               {{"alpha", locus.alpha},
                {"beta", locus.beta},
                {"class", std::string(surface_kind_name(cls.kind))},
                {"radius_sq", cls.radius_sq},
                {"in_locus", in_locus(m, locus, tol)}}}};
  doc["family"] = is_involution(m, tol) ? to_json(classify_involution(m, tol))
                                        : json(nullptr);
  const auto phi = symmetric_involutions_are_householder(m, tol);
  doc["householder_phi"] = phi ? json(*phi) : json(nullptr);
  return dump(doc);
}

// ---- bell ------------------------------------------------------------------

struct BellOptions {
  std::string matrix;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> z;
};

std::string run_bell(const BellOptions& o, const Tolerance& tol) {
  BellPoint p;
  json doc;
  if (!o.matrix.empty()) {
    if (o.x || o.y || o.z) throw UsageError("--matrix cannot be combined with --x/--y/--z");
    const Mat2 m = matrix_arg(o.matrix);
    p = to_bell(m, o.alpha.value_or(m.trace()), tol);
    doc["matrix"] = to_json(m);
  } else {
    if (!o.x || !o.y || !o.z) throw UsageError("bell needs --matrix or all of --x --y --z");
    p = {*o.x, *o.y, *o.z, o.alpha.value_or(0.0)};
    doc["matrix"] = to_json(from_bell(p));
  }
  doc["alpha"] = p.alpha;
  doc["bell"] = {{"x", p.x}, {"y", p.y}, {"z", p.z}};
  if (o.beta) {
    const LocusParams lp{p.alpha, *o.beta};
    doc["beta"] = *o.beta;
    doc["residual"] = quadric_residual(p, lp, tol);
    doc["class"] = std::string(surface_kind_name(classify_quadric(lp, tol).kind));
  }
  return dump(doc);
}

// ---- generators ------------------------------------------------------------

struct GeneratorOptions {
  std::optional<double> phi;
  std::string matrix;
  std::string seed_matrix;
  std::vector<double> t = {-2.0, -0.5, 1.0, 3.0};
};

std::string run_generators(const GeneratorOptions& o, const Tolerance& tol) {
  if (o.phi.has_value() == !o.matrix.empty()) {
    throw UsageError("generators needs exactly one of --phi or --matrix");
  }
  const Mat2 a = o.phi ? principal_section_point(*o.phi) : matrix_arg(o.matrix);
  const GeneratorPair g = o.seed_matrix.empty()
                              ? generator_directions(a, tol)
                              : generator_directions(a, matrix_arg(o.seed_matrix), tol);
  const json identities = {
      {"AU-U", max_norm_diff(a * g.u, g.u)},
      {"UA+U", max_norm_diff(g.u * a, -g.u)},
      {"UU", (g.u * g.u).max_norm()},
      {"AV+V", max_norm_diff(a * g.v, -g.v)},
      {"VA-V", max_norm_diff(g.v * a, g.v)},
      {"VV", (g.v * g.v).max_norm()},
  };
  json lines = json::array();
  for (double t : o.t) {
    const Mat2 pu = generator_point(a, g.u, t);
    const Mat2 pv = generator_point(a, g.v, t);
    lines.push_back({{"t", t},
                     {"u_point", to_json(pu)},
                     {"u_residual", involution_residual(pu)},
                     {"v_point", to_json(pv)},
                     {"v_residual", involution_residual(pv)}});
  }
  return dump({{"point", to_json(a)},
               {"u", to_json(g.u)},
               {"v", to_json(g.v)},
               {"identities", identities},
               {"lines", lines}});
}

// ---- quat ------------------------------------------------------------------

struct QuatOptions {
  std::string matrix;
  std::string quat;
  std::string times;
  std::string root;
  double t = 0.0;
  double phi = 0.0;
};

json quat_summary(const SplitQuat& q, const Tolerance& tol) {
  json doc = {{"quat", to_json(q)},
              {"matrix", to_json(to_matrix(q))},
              {"modulus", sq_modulus(q)},
              {"class", std::string(causal_class_name(sq_classify(q, tol)))}};
  doc["inverse"] = sq_classify(q, tol) == CausalClass::kLightlike
                       ? json(nullptr)
                       : to_json(sq_inverse(q, tol));
  return doc;
}

std::string run_quat(const QuatOptions& o, const Tolerance& tol) {
  const int sources = !o.matrix.empty() + !o.quat.empty() + !o.root.empty();
  if (sources != 1) {
    throw UsageError("quat needs exactly one of --matrix, --quat or --root");
  }
  if (!o.times.empty() && o.quat.empty()) throw UsageError("--times requires --quat");
  if (!o.matrix.empty()) {
    return dump(quat_summary(from_matrix(matrix_arg(o.matrix)), tol));
  }
  if (!o.quat.empty()) {
    const SplitQuat q = io::quat_from_json(io::parse_document(o.quat));
    if (o.times.empty()) return dump(quat_summary(q, tol));
    const SplitQuat p = io::quat_from_json(io::parse_document(o.times));
    json doc = quat_summary(q * p, tol);
    doc["left"] = to_json(q);
    doc["right"] = to_json(p);
    return dump(doc);
  }
  const bool identity = o.root == "identity";
  const SplitQuat q = identity ? unit_root_identity(o.t, o.phi)
                               : unit_root_neg(o.t, o.phi, tol);
  const SplitQuat target = identity ? SplitQuat::one() : -SplitQuat::one();
  const RootDecomposition d = decompose_root(
      o.t, o.phi, identity ? RootTarget::kIdentity : RootTarget::kNegIdentity, tol);
  json doc = quat_summary(q, tol);
  doc["root_of"] = identity ? "identity" : "neg_identity";
  doc["t"] = o.t;
  doc["phi"] = o.phi;
  doc["square_residual"] = sq_max_diff(q * q, target);
  doc["decomposition"] = {{"coef_h", d.coef_h},
                          {"h", to_json(d.h)},
                          {"coef_j", d.coef_j},
                          {"j", to_json(d.j)}};
  return dump(doc);
}

// ---- matfun ----------------------------------------------------------------

struct MatfunOptions {
  std::string matrix;
  std::string function = "sqrt";
  bool all_branches = false;
};

std::string run_matfun(const MatfunOptions& o, const Tolerance& tol) {
  const Mat2 a = matrix_arg(o.matrix);
  const Jordan2 j = jordan2(a, tol);
  const RootCardinality count = count_real_roots(a, tol);
  json doc = {{"matrix", to_json(a)},
              {"eigenvalues", {j.lambda1, j.lambda2}},
              {"jordan",
               {{"kind", std::string(jordan_kind_name(j.kind))},
                {"z", to_json(j.z)},
                {"form", to_json(j.form_matrix())}}},
              {"function", o.function},
              {"root_count",
               {{"kind", std::string(cardinality_name(count.kind))},
                {"count", count.count}}}};
  if (o.all_branches) {
    if (o.function != "sqrt") throw UsageError("--all-branches requires --function sqrt");
    const SqrtBranches br = sqrt_branches(a, tol);
    json roots = json::array();
    for (std::size_t i = 0; i < br.roots.size(); ++i) {
      roots.push_back({{"matrix", to_json(br.roots[i])},
                       {"primary", i < br.primary_count},
                       {"residual", max_norm_diff(br.roots[i] * br.roots[i], a)}});
    }
    doc["branches"] = roots;
    doc["infinitely_many"] = br.infinitely_many;
  } else {
    const ScalarFunction f =
        o.function == "sqrt" ? ScalarFunction::sqrt() : ScalarFunction::square();
    doc["result"] = to_json(matrix_function(a, f, tol));
  }
  return dump(doc);
}

// ---- sample ----------------------------------------------------------------

struct SampleOptions {
  double alpha = 0.0;
  double beta = -1.0;
  int nu = 16;
  int nv = 64;
  std::optional<double> generators_phi;
  int generator_points = 9;
  double generator_tmax = 2.0;
};

std::string run_sample(const SampleOptions& o, const CommonOptions& common,
                       const Tolerance& tol) {
  const LocusParams lp{o.alpha, o.beta};
  std::vector<SurfacePoint> pts = sample_surface(lp, o.nu, o.nv, tol);
  if (o.generators_phi) {
    const auto lines = sample_generator_lines(lp, *o.generators_phi,
                                              o.generator_points, o.generator_tmax, tol);
    pts.insert(pts.end(), lines.begin(), lines.end());
  }
  if (common.format == "csv") {
    std::ostringstream os;
    io::write_point_cloud_csv(os, pts);
    return os.str();
  }
  const SurfaceClass cls = classify_quadric(lp, tol);
  return dump({{"alpha", o.alpha},
               {"beta", o.beta},
               {"class", std::string(surface_kind_name(cls.kind))},
               {"radius_sq", cls.radius_sq},
               {"points", io::point_cloud_json(pts)}});
}

// ---- decompose -------------------------------------------------------------

struct DecomposeOptions {
  std::string matrix;
  std::string family;
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
};

std::string run_decompose(const DecomposeOptions& o, const Tolerance& tol) {
  if (o.matrix.empty() == o.family.empty()) {
    throw UsageError("decompose needs exactly one of --matrix or --family");
  }
  RootFamily family;
  Mat2 m;
  if (!o.matrix.empty()) {
    m = matrix_arg(o.matrix);
    family = classify_involution(m, tol);
  } else {
    family = {tag_from_name(o.family), o.a, o.b, o.c};
    m = make_root(family, tol);
  }
  const Decomposition d = family.tag == FamilyTag::kGeneral
                              ? decompose_general(m, tol)
                              : decompose_case(family);
  json doc = to_json(d);
  doc["matrix"] = to_json(m);
  doc["family"] = to_json(family);
  doc["residual"] = max_norm_diff(d.recompose(), m);
  return dump(doc);
}

// ---- orbit -----------------------------------------------------------------

struct OrbitOptions {
  std::string matrix;
  double x = 1.0;
  double y = 0.0;
  int steps = 2;
};

std::string run_orbit(const OrbitOptions& o, const CommonOptions& common) {
  const Mat2 t = matrix_arg(o.matrix);
  const auto pts = orbit(t, Vec2(o.x, o.y), o.steps);
  if (common.format == "csv") {
    std::ostringstream os;
    io::write_orbit_csv(os, pts);
    return os.str();
  }
  return dump({{"matrix", to_json(t)}, {"orbit", io::orbit_json(pts)}});
}

void print_error(std::ostream& err, std::string_view code, const std::string& detail) {
  err << json{{"error", std::string(code)}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* v = std::getenv("INVGEO_TOL")) env.tol_override = std::string(v);
  return env;
}

Tolerance tolerance_from(const Environment& env) {
  if (!env.tol_override) return Tolerance();
  const std::string& text = *env.tol_override;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !(v > 0.0) ||
      !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidTolerance,
                "INVGEO_TOL must be a positive number, got '" + text + "'");
  }
  return Tolerance(v, std::min(Tolerance::kDefaultExact, v));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Square roots of +-I2: families, quadric geometry, split-quaternions "
               "and matrix functions",
               "invgeo"};
  app.require_subcommand(1);

  CommonOptions common;
  RootsOptions roots;
  ClassifyOptions classify;
  BellOptions bell;
  GeneratorOptions gens;
  QuatOptions quat;
  MatfunOptions matfun;
  SampleOptions sample;
  DecomposeOptions decompose;
  OrbitOptions orb;

  auto* roots_cmd = app.add_subcommand("roots", "Construct or sample square roots of +-I2");
  roots_cmd->add_option("--of", roots.of)->check(CLI::IsMember({"identity", "neg-identity"}));
  roots_cmd->add_option("--family", roots.family, "Root family tag (identity only)");
  roots_cmd->add_option("--a", roots.a);
  roots_cmd->add_option("--b", roots.b);
  roots_cmd->add_option("--c", roots.c);
  roots_cmd->add_option("--sample", roots.sample, "Draw this many random roots");
  roots_cmd->add_option("--range", roots.range, "Sampling half-width for a and b");
  add_common(roots_cmd, common, false);

  auto* classify_cmd = app.add_subcommand("classify", "Classify S(alpha,beta) or a matrix");
  classify_cmd->add_option("--alpha", classify.alpha);
  classify_cmd->add_option("--beta", classify.beta);
  classify_cmd->add_option("--matrix", classify.matrix, "Matrix JSON or @file");
  add_common(classify_cmd, common, false);

  auto* bell_cmd = app.add_subcommand("bell", "Convert between matrices and Bell coordinates");
  bell_cmd->add_option("--matrix", bell.matrix, "Matrix JSON or @file");
  bell_cmd->add_option("--alpha", bell.alpha);
  bell_cmd->add_option("--beta", bell.beta, "Also report the quadric residual");
  bell_cmd->add_option("--x", bell.x);
  bell_cmd->add_option("--y", bell.y);
  bell_cmd->add_option("--z", bell.z);
  add_common(bell_cmd, common, false);

  auto* gen_cmd = app.add_subcommand("generators", "Rulings of S(0,-1) through a point");
  gen_cmd->add_option("--phi", gens.phi, "Principal-section angle");
  gen_cmd->add_option("--matrix", gens.matrix, "Involution JSON or @file");
  gen_cmd->add_option("--seed-matrix", gens.seed_matrix, "Seed X in (A+I)X(A-I)");
  gen_cmd->add_option("--t", gens.t, "Line parameters")->delimiter(',');
  add_common(gen_cmd, common, false);

  auto* quat_cmd = app.add_subcommand("quat", "Split-quaternion <-> matrix conversions");
  quat_cmd->add_option("--matrix", quat.matrix, "Matrix JSON or @file");
  quat_cmd->add_option("--quat", quat.quat, "Split-quaternion JSON or @file");
  quat_cmd->add_option("--times", quat.times, "Right factor for --quat");
  quat_cmd->add_option("--root", quat.root)->check(CLI::IsMember({"identity", "neg-identity"}));
  quat_cmd->add_option("--t", quat.t);
  quat_cmd->add_option("--phi", quat.phi);
  add_common(quat_cmd, common, false);

  auto* matfun_cmd = app.add_subcommand("matfun", "Jordan form and matrix functions");
  matfun_cmd->add_option("--matrix", matfun.matrix, "Matrix JSON or @file")->required();
  matfun_cmd->add_option("--function", matfun.function)
      ->check(CLI::IsMember({"sqrt", "square"}));
  matfun_cmd->add_flag("--all-branches", matfun.all_branches);
  add_common(matfun_cmd, common, false);

  auto* sample_cmd = app.add_subcommand("sample", "Point cloud on S(alpha,beta)");
  sample_cmd->add_option("--alpha", sample.alpha);
  sample_cmd->add_option("--beta", sample.beta);
  sample_cmd->add_option("--nu", sample.nu);
  sample_cmd->add_option("--nv", sample.nv);
  sample_cmd->add_option("--generators", sample.generators_phi,
                         "Append both rulings through the principal-section point at this angle");
  sample_cmd->add_option("--generator-points", sample.generator_points);
  sample_cmd->add_option("--generator-tmax", sample.generator_tmax);
  add_common(sample_cmd, common, true);

  auto* decompose_cmd = app.add_subcommand("decompose", "Elementary-transform factorization");
  decompose_cmd->add_option("--matrix", decompose.matrix, "Involution JSON or @file");
  decompose_cmd->add_option("--family", decompose.family);
  decompose_cmd->add_option("--a", decompose.a);
  decompose_cmd->add_option("--b", decompose.b);
  decompose_cmd->add_option("--c", decompose.c);
  add_common(decompose_cmd, common, false);

  auto* orbit_cmd = app.add_subcommand("orbit", "Repeated application of a matrix to a point");
  orbit_cmd->add_option("--matrix", orb.matrix, "Matrix JSON or @file")->required();
  orbit_cmd->add_option("--x", orb.x);
  orbit_cmd->add_option("--y", orb.y);
  orbit_cmd->add_option("--steps", orb.steps);
  add_common(orbit_cmd, common, true);

  std::vector<std::string> argv_storage = {"invgeo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kExitUsage;
  }

  std::string document;
  try {
    const Tolerance tol = tolerance_from(env);
    if (roots_cmd->parsed()) {
      document = run_roots(roots, common, tol);
    } else if (classify_cmd->parsed()) {
      document = run_classify(classify, tol);
    } else if (bell_cmd->parsed()) {
      document = run_bell(bell, tol);
    } else if (gen_cmd->parsed()) {
      document = run_generators(gens, tol);
    } else if (quat_cmd->parsed()) {
      document = run_quat(quat, tol);
    } else if (matfun_cmd->parsed()) {
      document = run_matfun(matfun, tol);
    } else if (sample_cmd->parsed()) {
      document = run_sample(sample, common, tol);
    } else if (decompose_cmd->parsed()) {
      document = run_decompose(decompose, tol);
    } else if (orbit_cmd->parsed()) {
      document = run_orbit(orb, common);
    }
  } catch (const UsageError& e) {
    print_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    print_error(err, code_name(e.code()), e.what());
    const bool usage = e.code() == ErrorCode::kMalformedInput ||
                       e.code() == ErrorCode::kInvalidTolerance;
    return usage ? kExitUsage : kExitDomainError;
  }

  if (common.output.empty()) {
    out << document;
    return kExitOk;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file || !(file << document)) {
    print_error(err, "io", "cannot write '" + common.output + "'");
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace invgeo::cli
