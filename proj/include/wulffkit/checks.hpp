// The verification battery: every identity and detector
// assertion the library is expected to satisfy, as named checks with numeric
// evidence. Shared by the CLI `verify` subcommand and the acceptance suite.
// All thresholds are pinned here.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wulffkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string reason;  // populated when skipped
  std::vector<std::pair<std::string, std::string>> evidence;  // ordered
  double wall_ms = 0.0;  // measured; excluded from canonical serialization
};

struct VerifyOptions {
  uint64_t seed = 20260808ULL;
  double tol_scale = 1.0;  // multiplies the report bands (CLI --tol)
  int s1_level = 512;
  int s2_level = 4;
  int probes = 10000;
  bool quick = false;  // trims probe counts and the heavy lens identity
};

struct VerifyReport {
  std::string schema = "wulffkit-report/1";
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.skipped && !c.pass) return false;
    return true;
  }
};

// Individual checks. Names are stable identifiers used in reports.
CheckResult check_integrand_support_oracle(const VerifyOptions& opt);
CheckResult check_integrand_minimality(const VerifyOptions& opt);
CheckResult check_inversion_factorization(const VerifyOptions& opt);
CheckResult check_psi_properties(const VerifyOptions& opt);
CheckResult check_spherical_route(const VerifyOptions& opt);
CheckResult check_cap_equivalence(const VerifyOptions& opt);
CheckResult check_double_polar(const VerifyOptions& opt);
CheckResult check_polar_antitone(const VerifyOptions& opt);
CheckResult check_dual_wulff_oracle(const VerifyOptions& opt);
CheckResult check_dual_boundary_inversion(const VerifyOptions& opt);
CheckResult check_regularity_battery(const VerifyOptions& opt);
CheckResult check_refinement(const VerifyOptions& opt);
CheckResult check_shared_shape(const VerifyOptions& opt);
CheckResult check_smooth_field_suite(const VerifyOptions& opt);
CheckResult check_polytope_duality(const VerifyOptions& opt);

/// Runs the full battery in a fixed order.
VerifyReport run_battery(const VerifyOptions& opt);

}  // namespace wulffkit
