#include "wulffkit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wulffkit {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

GammaField parse_gamma_spec(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("gamma spec: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("gamma spec: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("gamma spec: missing integer field \"n\"");
  int n = j["n"].get<int>();
  if (n != 1 && n != 2) throw ParseError("gamma spec: \"n\" must be 1 or 2");

  try {
    if (j.contains("samples")) {
      if (!j["samples"].is_array() || j["samples"].empty())
        throw ParseError("gamma spec: \"samples\" must be a nonempty array");
      if (j.contains("interp") && j["interp"].get<std::string>() != "linear")
        throw ParseError("gamma spec: only \"linear\" interpolation is supported");
      std::vector<UnitVector> dirs;
      std::vector<double> vals;
      for (const auto& row : j["samples"]) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n + 2))
          throw ParseError(
              "gamma spec: each sample row needs n+1 direction components "
              "and a value");
        Vec d = Vec::zero(n + 1);
        for (int i = 0; i < n + 1; ++i)
          d[i] = row[static_cast<size_t>(i)].get<double>();
        dirs.push_back(UnitVector(d));
        vals.push_back(row[static_cast<size_t>(n + 1)].get<double>());
      }
      return GammaField::sampled(n, std::move(dirs), std::move(vals));
    }

    if (!j.contains("preset") || !j["preset"].is_string())
      throw ParseError("gamma spec: need \"preset\" or \"samples\"");
    std::string preset = j["preset"].get<std::string>();
    ordered_json params =
        j.contains("params") ? j["params"] : ordered_json::object();

    if (preset == "constant")
      return GammaField::constant(n, params.value("r", 1.0));
    if (preset == "ellipse" || preset == "ellipsoid") {
      std::vector<double> a;
      if (params.contains("a"))
        for (const auto& v : params["a"]) a.push_back(v.get<double>());
      if (a.empty()) a.assign(static_cast<size_t>(n + 1), 1.0);
      return GammaField::ellipse(n, std::move(a));
    }
    if (preset == "cube") {
      std::vector<double> a;
      if (params.contains("a"))
        for (const auto& v : params["a"]) a.push_back(v.get<double>());
      if (a.empty()) a.assign(static_cast<size_t>(n + 1), 1.0);
      return GammaField::cube_support(n, std::move(a));
    }
    if (preset == "lens") {
      if (n != 1) throw ParseError("gamma spec: the lens preset needs n = 1");
      return GammaField::lens();
    }
    if (preset == "trig-poly")
      return GammaField::random_trig_poly(n, params.value("seed", 1ULL),
                                          params.value("convex", false));
    if (preset == "poly") {
      std::vector<Vec> verts;
      if (!params.contains("vertices"))
        throw ParseError("gamma spec: poly preset needs params.vertices");
      for (const auto& row : params["vertices"]) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n + 1))
          throw ParseError("gamma spec: each vertex needs n+1 coordinates");
        Vec v = Vec::zero(n + 1);
        for (int i = 0; i < n + 1; ++i)
          v[i] = row[static_cast<size_t>(i)].get<double>();
        verts.push_back(v);
      }
      return GammaField::poly_support(n, std::move(verts));
    }
    throw ParseError("gamma spec: unknown preset \"" + preset + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gamma spec: ") + e.what());
  }
}

GammaField load_gamma_spec(const std::string& path) {
  return parse_gamma_spec(read_file(path));
}

std::string render_svg(const std::vector<SvgLayer>& layers) {
  double lo = 1e300, hi = -1e300;
  for (const SvgLayer& l : layers)
    for (const Vec& p : l.points) {
      lo = std::min({lo, p[0], p[1]});
      hi = std::max({hi, p[0], p[1]});
    }
  if (lo > hi) {
    lo = -1.0;
    hi = 1.0;
  }
  double margin = 0.05 * (hi - lo);
  lo -= margin;
  hi += margin;
  const double scale = 640.0 / (hi - lo);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"640\" viewBox=\"0 0 640 640\">\n";
  for (const SvgLayer& l : layers) {
    if (l.points.empty()) continue;
    out << "  <path fill=\"none\" stroke=\"" << l.color
        << "\" stroke-width=\"1.5\" d=\"";
    for (size_t i = 0; i < l.points.size(); ++i) {
      double x = (l.points[i][0] - lo) * scale;
      double y = 640.0 - (l.points[i][1] - lo) * scale;  // y grows upward
      out << (i == 0 ? "M" : "L") << format_double(x) << ' '
          << format_double(y);
    }
    if (l.closed) out << "Z";
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_obj(const Polytope& W) {
  if (W.dim != 3) throw DomainError("OBJ export needs a 3D polytope");
  std::ostringstream out;
  for (const Vec& v : W.vertices)
    out << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
        << format_double(v[2]) << '\n';
  for (const Facet& f : W.facets) {
    out << 'f';
    for (int idx : f.ring) out << ' ' << idx + 1;
    out << '\n';
  }
  return out.str();
}

std::string render_integrand_csv(const std::vector<UnitVector>& mesh,
                                 const std::vector<double>& gamma_values,
                                 const std::vector<double>& integrand_values,
                                 double band) {
  std::ostringstream out;
  const int d = mesh.empty() ? 2 : mesh.front().dim();
  for (int i = 0; i < d; ++i) out << "dir_" << i << ',';
  out << "gamma,gamma_w,equal\n";
  for (size_t k = 0; k < mesh.size(); ++k) {
    for (int i = 0; i < d; ++i) out << format_double(mesh[k][i]) << ',';
    double diff = std::fabs(gamma_values[k] - integrand_values[k]);
    out << format_double(gamma_values[k]) << ','
        << format_double(integrand_values[k]) << ','
        << (diff <= band ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

ordered_json kinks_json(const C1Report& rep) {
  ordered_json j;
  j["level_coarse"] = rep.level_coarse;
  j["level_fine"] = rep.level_fine;
  j["max_gap_coarse"] = format_double(rep.max_gap_coarse);
  j["max_gap_fine"] = format_double(rep.max_gap_fine);
  j["kinks"] = ordered_json::array();
  for (const KinkCandidate& k : rep.kinks) {
    ordered_json e;
    e["direction"] = ordered_json::array();
    for (int i = 0; i < k.direction.dim(); ++i)
      e["direction"].push_back(format_double(k.direction[i]));
    e["gap_coarse"] = format_double(k.gap_coarse);
    e["gap_fine"] = format_double(k.gap_fine);
    j["kinks"].push_back(std::move(e));
  }
  return j;
}

ordered_json flats_json(const FlatSpotReport& rep) {
  ordered_json j;
  j["level_coarse"] = rep.level_coarse;
  j["level_fine"] = rep.level_fine;
  j["max_cluster_coarse"] = format_double(rep.max_cluster_coarse);
  j["max_cluster_fine"] = format_double(rep.max_cluster_fine);
  j["spots"] = ordered_json::array();
  for (const FlatSpot& s : rep.spots) {
    ordered_json e;
    e["normal"] = ordered_json::array();
    for (int i = 0; i < s.normal.dim(); ++i)
      e["normal"].push_back(format_double(s.normal[i]));
    e["diameter_coarse"] = format_double(s.diameter_coarse);
    e["diameter_fine"] = format_double(s.diameter_fine);
    e["facets_coarse"] = s.facets_coarse;
    e["facets_fine"] = s.facets_fine;
    j["spots"].push_back(std::move(e));
  }
  return j;
}

const char* verdict_name(TriVerdict v) {
  switch (v) {
    case TriVerdict::yes:
      return "yes";
    case TriVerdict::no:
      return "no";
    default:
      return "mixed";
  }
}

}  // namespace

std::string analysis_report_json(const AnalysisReport& rep) {
  ordered_json j;
  j["schema"] = "wulffkit-report/1";
  j["field"] = rep.field;
  j["n"] = rep.n;
  j["levels"] = rep.levels;
  j["seed"] = rep.seed;
  j["tolerances"] = {{"abs_tol", format_double(rep.tolerances.abs_tol)},
                     {"hull_tol", format_double(rep.tolerances.hull_tol)},
                     {"report_tol", format_double(rep.tolerances.report_tol)}};
  j["detector"] = {
      {"kink_gap_floor", format_double(rep.config.kink_gap_floor)},
      {"kink_persistence", format_double(rep.config.kink_persistence)},
      {"flat_persistence", format_double(rep.config.flat_persistence)},
      {"flat_threshold_edges", format_double(rep.config.flat_threshold_edges)},
      {"cluster_window_edges", format_double(rep.config.cluster_window_edges)}};
  j["verdict"] = rep.verdict;
  j["confident"] = rep.confident;
  j["integrand_kinked"] = verdict_name(rep.integrand_kinked);
  j["input_kinked"] = verdict_name(rep.input_kinked);
  j["body_flat_spotted"] = verdict_name(rep.body_flat_spotted);
  j["nonsmooth_admissible"] = rep.nonsmooth_admissible;
  j["integrand_kinks"] = ordered_json::array();
  for (const C1Report& r : rep.integrand_kinks)
    j["integrand_kinks"].push_back(kinks_json(r));
  j["input_kinks"] = ordered_json::array();
  for (const C1Report& r : rep.input_kinks)
    j["input_kinks"].push_back(kinks_json(r));
  j["flat_spots"] = ordered_json::array();
  for (const FlatSpotReport& r : rep.flat_spots)
    j["flat_spots"].push_back(flats_json(r));
  return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& rep, bool include_timings) {
  ordered_json j;
  j["schema"] = rep.schema;
  j["seed"] = rep.options.seed;
  j["tol_scale"] = format_double(rep.options.tol_scale);
  j["levels"] = {{"s1", rep.options.s1_level}, {"s2", rep.options.s2_level}};
  j["probes"] = rep.options.probes;
  j["quick"] = rep.options.quick;
  j["all_pass"] = rep.all_pass();
  j["checks"] = ordered_json::array();
  for (const CheckResult& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    if (c.skipped) {
      e["verdict"] = "skipped";
      e["reason"] = c.reason;
    } else {
      e["verdict"] = c.pass ? "pass" : "fail";
    }
    ordered_json evj = ordered_json::object();
    for (const auto& [k, v] : c.evidence) evj[k] = v;
    e["evidence"] = std::move(evj);
    if (include_timings) e["wall_ms"] = format_double(c.wall_ms);
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open for writing: " + path);
  out << content;
  if (!out) throw DomainError("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wulffkit
