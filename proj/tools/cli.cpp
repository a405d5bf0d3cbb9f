#include "cli.hpp"

#include "minkowski/convexity.hpp"
#include "minkowski/coordinates.hpp"
#include "minkowski/curvature.hpp"
#include "minkowski/isometry.hpp"
#include "minkowski/norm_json.hpp"
#include "minkowski/sphere.hpp"
#include "minkowski/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace minkowski {

namespace {

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = 20240229;
  std::optional<int> samples;
  std::string out_path;
  std::string csv_path;
};

// Input that cannot be used at all: exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

Norm load_norm(const std::string& arg) {
  Norm n = parse_norm_argument(arg);
  if (n.defect()) throw NormSpecError("invalid norm \"" + arg + "\": " + *n.defect());
  return n;
}

Vec parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      xs.push_back(std::stod(part));
    } catch (const std::logic_error&) {
      throw UsageError("malformed point \"" + text + "\"");
    }
  }
  if (xs.size() == 2) return vec2(xs[0], xs[1]);
  if (xs.size() == 3) return vec3(xs[0], xs[1], xs[2]);
  throw UsageError("a point needs 2 or 3 comma-separated coordinates");
}

SpherePoint sphere_point(const Norm& norm, const std::string& text) {
  const Vec v = parse_point(text);
  if (v.size() != norm.dim()) throw UsageError("point dimension does not match the norm");
  return on_sphere(norm, v, kTol.search);
}

void emit(const json& j, const Globals& g, std::ostream& out) {
  const std::string text = j.dump(2);
  out << text << "\n";
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path);
    if (!f) throw UsageError("cannot write " + g.out_path);
    f << text << "\n";
  }
}

void emit_csv(const std::string& header, const std::vector<std::pair<double, double>>& rows,
              const Globals& g) {
  if (g.csv_path.empty()) return;
  std::ofstream f(g.csv_path);
  if (!f) throw UsageError("cannot write " + g.csv_path);
  f.precision(17);
  f << header << "\n";
  for (const auto& [a, b] : rows) f << a << "," << b << "\n";
}

int run_verify(const Globals& g, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.circle_samples = *g.samples;
  const auto report = verify_examples(opt);
  emit(report.to_json(), g, out);
  return report.passed() ? 0 : 1;
}

int run_curvature(const Globals& g, const std::string& norm_arg, const std::string& curve_arg,
                  double at, std::ostream& out) {
  const Norm ambient = load_norm(norm_arg);
  const Curve curve = parse_curve(curve_arg, ambient);
  const auto est = normed_curvature(ambient, curve, at);
  json j = est.to_json();
  j["curve"] = curve.label;
  j["norm"] = norm_to_json(ambient);
  emit(j, g, out);
  emit_csv("delta,ratio", est.ratios, g);
  return est.value ? 0 : 1;
}

int run_modulus(const Globals& g, const std::string& norm_arg, int count, std::ostream& out) {
  const Norm norm = load_norm(norm_arg);
  if (count < 1) throw UsageError("--count must be positive");
  std::vector<double> eps;
  for (int k = 1; k <= count; ++k) eps.push_back(2.0 * k / count);
  const auto curve = modulus_curve(norm, eps, g.samples.value_or(512));
  json rows = json::array();
  for (const auto& [e, d] : curve.samples) rows.push_back({e, d});
  emit(json{{"norm", norm_to_json(norm)}, {"samples", rows}}, g, out);
  emit_csv("eps,delta", curve.samples, g);
  return 0;
}

int run_bisector(const Globals& g, const std::string& norm_arg, const std::string& point,
                 std::ostream& out) {
  const Norm norm = load_norm(norm_arg);
  const auto b = bisector_points(norm, sphere_point(norm, point));
  emit(json{{"plus", vec_to_json(b.plus.v)},
            {"minus", vec_to_json(b.minus.v)},
            {"unique", b.unique},
            {"tie_width", b.tie_width}},
       g, out);
  return 0;
}

int run_dset(const Globals& g, const std::string& norm_arg, const std::string& point,
             std::ostream& out) {
  const Norm norm = load_norm(norm_arg);
  const auto x = sphere_point(norm, point);
  const auto d = dset(norm, x);
  const auto s = star(norm, x);
  emit(json{{"dset", d.to_json()},
            {"star", s.to_json()},
            {"hausdorff_to_negated_star", hausdorff_distance(d, s.negated())},
            {"flat", is_flat(norm, x)}},
       g, out);
  return 0;
}

int run_isometry(const Globals& g, const std::string& a_arg, const std::string& b_arg,
                 std::ostream& out) {
  const Norm a = load_norm(a_arg);
  const Norm b = load_norm(b_arg);
  const int n = g.samples.value_or(256);
  const double tol = g.tol.value_or(kTol.match);
  const auto fa = fingerprint(a, n);
  const auto fb = fingerprint(b, n);
  const auto found = align(fa, fb, tol);
  const auto chart_x = make_chart(a, {fa.points[0], fa.points[static_cast<std::size_t>(n / 4)]});
  json list = json::array();
  for (const auto& al : found) {
    const auto map = induced_map(fa, fb, al);
    json j = al.to_json();
    j["antipodal_defect"] = antipodality_defect(map);
    try {
      const auto chart_y =
          make_chart(b, {map.pairs[0].second, map.pairs[static_cast<std::size_t>(n / 4)].second});
      j["linearity"] = linearity_defect(map, chart_x, chart_y).to_json();
    } catch (const PreconditionError& e) {
      j["linearity"] = json{{"error", e.what()}};
    }
    list.push_back(j);
  }
  emit(json{{"samples", n},
            {"tol", tol},
            {"circumference_a", fa.circumference},
            {"circumference_b", fb.circumference},
            {"circumference_gap", std::abs(fa.circumference - fb.circumference)},
            {"alignments", list}},
       g, out);
  return 0;
}

int run_fingerprint(const Globals& g, const std::string& norm_arg, std::ostream& out) {
  const Norm norm = load_norm(norm_arg);
  const auto fp = fingerprint(norm, g.samples.value_or(64));
  json pts = json::array();
  std::vector<std::pair<double, double>> rows;
  for (const auto& p : fp.points) {
    pts.push_back(vec_to_json(p.v));
    rows.emplace_back(p.v(0), p.v(1));
  }
  emit(json{{"n", fp.n}, {"circumference", fp.circumference}, {"spacing", fp.spacing()}, {"points", pts}},
       g, out);
  emit_csv("x,y", rows, g);
  return 0;
}

int run_validate(const Globals& g, const std::string& norm_arg, std::ostream& out) {
  const Norm norm = parse_norm_argument(norm_arg);
  const auto r = validate_norm(norm, g.samples.value_or(1000), g.seed);
  emit(json{{"samples", r.samples},
            {"triangle_violation", r.triangle_violation},
            {"homogeneity_violation", r.homogeneity_violation},
            {"symmetry_violation", r.symmetry_violation},
            {"invariant_failure", r.invariant_failure ? json(*r.invariant_failure) : json(nullptr)},
            {"passed", r.passed}},
       g, out);
  return r.passed ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational geometry of normed planes and spaces", "minkowski"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Matching tolerance");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--samples", g.samples, "Sample count or resolution");
  app.add_option("--out", g.out_path, "Also write the JSON result here");
  app.add_option("--csv", g.csv_path, "Write plot data here");

  std::string norm_arg = "euclidean";
  std::string norm_a;
  std::string norm_b;
  std::string curve_arg = "circle:1";
  std::string point_arg = "1,0";
  double at = 0.0;
  int count = 20;

  auto* verify = app.add_subcommand("verify", "Check every worked example");
  auto* curvature = app.add_subcommand("curvature", "Normed curvature of a curve");
  curvature->add_option("--norm", norm_arg, "Ambient norm");
  curvature->add_option("--curve", curve_arg, "circle:<r>, ellipse:<a>,<b> or sphere");
  curvature->add_option("--at", at, "Curve parameter of the point");
  auto* modulus = app.add_subcommand("modulus", "Modulus of convexity");
  modulus->add_option("--norm", norm_arg, "Norm");
  modulus->add_option("--count", count, "Number of eps values in (0, 2]");
  auto* bisector = app.add_subcommand("bisector", "Symmetric bisector of a sphere point");
  bisector->add_option("--norm", norm_arg, "Norm");
  bisector->add_option("--point", point_arg, "Sphere point x,y");
  auto* dset_cmd = app.add_subcommand("dset", "D(x) and the star of x");
  dset_cmd->add_option("--norm", norm_arg, "Norm");
  dset_cmd->add_option("--point", point_arg, "Sphere point x,y");
  auto* isometry = app.add_subcommand("isometry", "Search sphere isometries by chord fingerprints");
  isometry->add_option("--normA", norm_a, "Source norm")->required();
  isometry->add_option("--normB", norm_b, "Target norm")->required();
  auto* fp = app.add_subcommand("fingerprint", "Arc-length sampling of a sphere");
  fp->add_option("--norm", norm_arg, "Norm");
  auto* validate = app.add_subcommand("validate", "Sample the norm axioms");
  validate->add_option("--norm", norm_arg, "Norm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(g, out);
    if (curvature->parsed()) return run_curvature(g, norm_arg, curve_arg, at, out);
    if (modulus->parsed()) return run_modulus(g, norm_arg, count, out);
    if (bisector->parsed()) return run_bisector(g, norm_arg, point_arg, out);
    if (dset_cmd->parsed()) return run_dset(g, norm_arg, point_arg, out);
    if (isometry->parsed()) return run_isometry(g, norm_a, norm_b, out);
    if (fp->parsed()) return run_fingerprint(g, norm_arg, out);
    if (validate->parsed()) return run_validate(g, norm_arg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace minkowski
