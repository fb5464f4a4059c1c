// wulffkit command line: build Wulff shapes from gamma specs, export
// integrands and dual shapes, run the regularity analysis, and execute the
// verification battery.
//
// Exit codes: 0 success, 1 usage, 2 spec/parse error, 3 numeric/domain error,
// 4 verification verdict failure.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wulffkit/analysis.hpp"
#include "wulffkit/checks.hpp"
#include "wulffkit/io.hpp"
#include "wulffkit/spherical.hpp"
#include "wulffkit/wulff_ops.hpp"

namespace {

using namespace wulffkit;

uint64_t default_seed() {
  if (const char* env = std::getenv("WULFFKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ParseError("WULFFKIT_SEED is not an unsigned integer");
    }
  }
  return VerifyOptions{}.seed;
}

std::vector<Vec> polygon_ring(const Polytope& W) {
  return W.vertices;  // 2D vertices are already in ring order
}

std::vector<Vec> polar_graph(const std::vector<UnitVector>& mesh,
                             const std::vector<double>& radii) {
  std::vector<Vec> pts;
  pts.reserve(mesh.size());
  for (size_t i = 0; i < mesh.size(); ++i) pts.push_back(mesh[i].v * radii[i]);
  return pts;
}

int default_level(int n) { return n == 1 ? 512 : 4; }

Vec parse_point(const std::string& text, int dim) {
  std::vector<double> xs;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      xs.push_back(std::stod(token));
    } catch (...) {
      throw ParseError("--point: not a number: " + token);
    }
  }
  if (static_cast<int>(xs.size()) != dim)
    throw ParseError("--point needs exactly " + std::to_string(dim) +
                     " coordinates");
  Vec p = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) p[i] = xs[static_cast<size_t>(i)];
  return p;
}

Tolerance tolerance_with(double report_tol) {
  Tolerance tol;
  if (report_tol > 0.0) tol.report_tol = report_tol;
  tol.validate();
  return tol;
}

void cmd_build(const std::string& spec_path, int level, const std::string& out,
               const std::string& format, bool overlay_hull,
               bool overlay_integrand, double report_tol) {
  GammaField gamma = load_gamma_spec(spec_path);
  if (level <= 0) level = default_level(gamma.n());
  const Tolerance tol = tolerance_with(report_tol);
  Polytope W = wulff_shape(gamma, level, tol);
  std::string fmt = format.empty() ? (gamma.n() == 1 ? "svg" : "obj") : format;
  if (fmt == "obj") {
    write_file(out, render_obj(W));
  } else if (fmt == "svg") {
    if (gamma.n() != 1) throw DomainError("SVG export needs n = 1");
    std::vector<SvgLayer> layers;
    layers.push_back({polygon_ring(W), true, "#1a1a1a"});
    if (overlay_hull) {
      Polytope H = gamma_hull(gamma, level, tol);
      layers.push_back({polygon_ring(H), true, "#c0392b"});
    }
    if (overlay_integrand) {
      std::vector<UnitVector> mesh = sphere_mesh(1, level);
      IntegrandSamples gw = convex_integrand(W, mesh, tol);
      layers.push_back({polar_graph(mesh, gw.values), true, "#2471a3"});
      std::vector<double> gv;
      for (const UnitVector& u : mesh) gv.push_back(gamma.eval(u));
      layers.push_back({polar_graph(mesh, gv), true, "#7d9c38"});
    }
    write_file(out, render_svg(layers));
  } else {
    throw ParseError("--format must be svg or obj");
  }
}

void cmd_integrand(const std::string& spec_path, int level,
                   const std::string& out, double report_tol) {
  GammaField gamma = load_gamma_spec(spec_path);
  if (level <= 0) level = default_level(gamma.n());
  const Tolerance tol = tolerance_with(report_tol);
  Polytope W = wulff_shape(gamma, level, tol);
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), level);
  IntegrandSamples gw = convex_integrand(W, mesh, tol);
  std::vector<double> gv;
  gv.reserve(mesh.size());
  for (const UnitVector& u : mesh) gv.push_back(gamma.eval(u));
  write_file(out, render_integrand_csv(mesh, gv, gw.values, tol.report_tol));
}

void cmd_dual(const std::string& spec_path, int level, const std::string& out,
              const std::string& format, double report_tol) {
  GammaField gamma = load_gamma_spec(spec_path);
  if (level <= 0) level = default_level(gamma.n());
  const Tolerance tol = tolerance_with(report_tol);
  Polytope W = wulff_shape(gamma, level, tol);
  Polytope D = dual_wulff(W, tol);
  double residual = hausdorff_distance(D, reflect(polar_body(W, tol), tol));
  std::string fmt = format.empty() ? (gamma.n() == 1 ? "svg" : "obj") : format;
  if (fmt == "obj")
    write_file(out, render_obj(D));
  else
    write_file(out, render_svg({{polygon_ring(D), true, "#1a1a1a"}}));
  std::cout << "{\n  \"reflected_polar_residual\": \""
            << format_double(residual) << "\",\n  \"band\": \""
            << format_double(tol.report_tol) << "\",\n  \"pass\": "
            << (residual <= tol.report_tol ? "true" : "false") << "\n}\n";
}

void cmd_analyze(const std::string& spec_path, std::vector<int> levels,
                 const std::string& out, uint64_t seed) {
  GammaField gamma = load_gamma_spec(spec_path);
  if (levels.empty())
    levels = gamma.n() == 1 ? std::vector<int>{256, 512, 1024}
                            : std::vector<int>{2, 3, 4};
  AnalysisReport rep = regularity_crosscheck(gamma, levels);
  rep.seed = seed;
  write_file(out, analysis_report_json(rep));
  if (rep.verdict != "consistent")
    std::cerr << "analyze: verdict " << rep.verdict << "\n";
}

void cmd_pedal(const std::string& spec_path, int level,
               const std::string& point_text, const std::string& out,
               double report_tol) {
  GammaField gamma = load_gamma_spec(spec_path);
  if (level <= 0) level = default_level(gamma.n());
  const Tolerance tol = tolerance_with(report_tol);
  Polytope W = wulff_shape(gamma, level, tol);
  Vec p = parse_point(point_text, W.dim);
  std::vector<PedalPoint> feet = pedal(W, p, tol);
  if (W.dim == 2) {
    // facet order is the ring order, so the feet trace the pedal curve
    std::vector<Vec> curve;
    curve.reserve(feet.size());
    for (const PedalPoint& f : feet) curve.push_back(f.point);
    std::vector<SvgLayer> layers;
    layers.push_back({polygon_ring(W), true, "#bbbbbb"});
    layers.push_back({curve, true, "#1a1a1a"});
    if (p.norm() <= tol.hull_tol) {
      std::vector<UnitVector> mesh = sphere_mesh(1, level);
      IntegrandSamples gw = convex_integrand(W, mesh, tol);
      layers.push_back({polar_graph(mesh, gw.values), true, "#2471a3"});
    }
    write_file(out, render_svg(layers));
  } else {
    std::ostringstream obj;
    for (const PedalPoint& f : feet)
      obj << "v " << format_double(f.point[0]) << ' '
          << format_double(f.point[1]) << ' ' << format_double(f.point[2])
          << '\n';
    write_file(out, obj.str());
  }
}

int cmd_verify(uint64_t seed, double tol_scale, int s1, int s2, int probes,
               bool quick, bool timings, const std::string& out) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.tol_scale = tol_scale;
  opt.s1_level = s1;
  opt.s2_level = s2;
  opt.probes = probes;
  opt.quick = quick;
  VerifyReport rep = run_battery(opt);
  std::string json = verify_report_json(rep, timings);
  if (!out.empty()) write_file(out, json);
  for (const CheckResult& c : rep.checks)
    std::cout << (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL")) << ' '
              << c.name << '\n';
  std::cout << (rep.all_pass() ? "verification passed" : "verification FAILED")
            << '\n';
  return rep.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wulff shapes, convex integrands, and their duals"};
  app.require_subcommand(1);

  std::string spec, out, format, point_text;
  int level = 0;
  std::vector<int> levels;
  uint64_t seed = 0;
  double report_tol = 0.0;  // 0 keeps the default band
  double tol_scale = 1.0;
  int s1 = 512, s2 = 4, probes = 10000;
  bool quick = false, timings = false;
  bool overlay_hull = false, overlay_integrand = false;

  CLI::App* build = app.add_subcommand("build", "construct a Wulff shape");
  build->add_option("spec", spec, "gamma spec JSON")->required();
  build->add_option("--mesh", level, "mesh level");
  build->add_option("--out", out, "output file")->required();
  build->add_option("--format", format, "svg|obj");
  build->add_option("--tol", report_tol, "report tolerance band");
  build->add_flag("--hull-overlay", overlay_hull, "overlay the inverted-graph hull");
  build->add_flag("--integrand-overlay", overlay_integrand,
                  "overlay integrand and gamma polar graphs");

  CLI::App* integrand = app.add_subcommand("integrand", "sample the convex integrand");
  integrand->add_option("spec", spec)->required();
  integrand->add_option("--mesh", level);
  integrand->add_option("--out", out)->required();
  integrand->add_option("--tol", report_tol);

  CLI::App* dual = app.add_subcommand("dual", "construct the dual Wulff shape");
  dual->add_option("spec", spec)->required();
  dual->add_option("--mesh", level);
  dual->add_option("--out", out)->required();
  dual->add_option("--format", format);
  dual->add_option("--tol", report_tol);

  CLI::App* analyze = app.add_subcommand("analyze", "strict convexity vs C1 crosscheck");
  analyze->add_option("spec", spec)->required();
  analyze->add_option("--levels", levels)->delimiter(',');
  analyze->add_option("--out", out)->required();

  CLI::App* pedal_cmd = app.add_subcommand("pedal", "pedal of the boundary");
  pedal_cmd->add_option("spec", spec)->required();
  pedal_cmd->add_option("--mesh", level);
  pedal_cmd->add_option("--point", point_text, "reference point x,y[,z]")->required();
  pedal_cmd->add_option("--out", out)->required();
  pedal_cmd->add_option("--tol", report_tol);

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--seed", seed);
  verify->add_option("--tol", tol_scale, "scale factor on report bands");
  verify->add_option("--s1-level", s1);
  verify->add_option("--s2-level", s2);
  verify->add_option("--probes", probes);
  verify->add_flag("--quick", quick, "reduced battery");
  verify->add_flag("--timings", timings, "include wall times in the report");
  verify->add_option("--out", out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (verify->count("--seed") == 0 && seed == 0) seed = default_seed();
    if (build->parsed())
      cmd_build(spec, level, out, format, overlay_hull, overlay_integrand,
                report_tol);
    else if (integrand->parsed())
      cmd_integrand(spec, level, out, report_tol);
    else if (dual->parsed())
      cmd_dual(spec, level, out, format, report_tol);
    else if (analyze->parsed())
      cmd_analyze(spec, levels, out, seed);
    else if (pedal_cmd->parsed())
      cmd_pedal(spec, level, point_text, out, report_tol);
    else if (verify->parsed())
      return cmd_verify(seed, tol_scale, s1, s2, probes, quick, timings, out);
  } catch (const wulffkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const wulffkit::DomainError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
