// Serialization boundary: gamma-spec JSON parsing, SVG/OBJ/CSV emitters, and
// JSON report writers. All floating-point output goes through to_chars, so
// bytes are locale-independent and reproducible.
#pragma once

#include <string>
#include <vector>

#include "wulffkit/analysis.hpp"
#include "wulffkit/checks.hpp"
#include "wulffkit/gamma.hpp"
#include "wulffkit/polytope.hpp"

namespace wulffkit {

/// Malformed input file or flag value (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

/// Parse a gamma spec: {"n":1|2, "preset": name, "params": {...}} or
/// {"n":1|2, "samples": [[dir..., value], ...], "interp": "linear"}.
GammaField parse_gamma_spec(const std::string& json_text);
GammaField load_gamma_spec(const std::string& path);

struct SvgLayer {
  std::vector<Vec> points;  // 2D
  bool closed = true;
  std::string color = "#1a1a1a";
};

/// Fixed-viewport SVG with one path per layer; deterministic bytes.
std::string render_svg(const std::vector<SvgLayer>& layers);

/// Wavefront OBJ for a 3D polytope, one face line per facet ring.
std::string render_obj(const Polytope& W);

/// CSV with direction components, gamma, gamma_W, and the equality flag.
std::string render_integrand_csv(const std::vector<UnitVector>& mesh,
                                 const std::vector<double>& gamma_values,
                                 const std::vector<double>& integrand_values,
                                 double band);

std::string analysis_report_json(const AnalysisReport& rep);
std::string verify_report_json(const VerifyReport& rep, bool include_timings);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace wulffkit
