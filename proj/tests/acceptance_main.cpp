// Acceptance suite: the pinned end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wulffkit/checks.hpp"

namespace fs = std::filesystem;
using namespace wulffkit;

namespace {

bool g_all_pass = true;

void report(int criterion, const std::string& label, bool pass,
            const std::string& evidence) {
  std::printf("[%2d] %s %-34s %s\n", criterion, pass ? "PASS" : "FAIL",
              label.c_str(), evidence.c_str());
  std::fflush(stdout);
  g_all_pass = g_all_pass && pass;
}

std::string brief(const CheckResult& c, size_t max_fields = 3) {
  std::string out;
  for (size_t i = 0; i < c.evidence.size() && i < max_fields; ++i) {
    if (i) out += " ";
    out += c.evidence[i].first + "=" + c.evidence[i].second;
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  VerifyOptions opt;  // pinned defaults: seed 20260808, S^1 512, S^2 subdiv 4

  {
    CheckResult c = check_integrand_support_oracle(opt);
    char extra[64];
    std::snprintf(extra, sizeof(extra), " runtime_ms=%.0f", c.wall_ms);
    report(1, "integrand-support oracle", c.pass, brief(c) + extra);
  }
  report(2, "integrand minimality", check_integrand_minimality(opt).pass,
         brief(check_integrand_minimality(opt)));
  {
    CheckResult c = check_inversion_factorization(opt);
    report(3, "inversion factorization", c.pass, brief(c));
  }
  {
    CheckResult c = check_psi_properties(opt);
    report(4, "psi properties (1)-(4)", c.pass, brief(c, 4));
  }
  {
    CheckResult c = check_spherical_route(opt);
    report(5, "two-route membership", c.pass, brief(c, 4));
  }
  {
    CheckResult a = check_cap_equivalence(opt);
    CheckResult b = check_double_polar(opt);
    CheckResult l = check_polar_antitone(opt);
    report(6, "polar-set equivalences", a.pass && b.pass && l.pass,
           "cap_equivalence=" + std::string(a.pass ? "ok" : "bad") +
               " double_polar=" + (b.pass ? "ok" : "bad") +
               " antitone=" + (l.pass ? "ok" : "bad"));
  }
  {
    CheckResult c = check_dual_wulff_oracle(opt);
    report(7, "dual Wulff oracle", c.pass, brief(c, 5));
  }
  {
    CheckResult c = check_dual_boundary_inversion(opt);
    report(8, "dual boundary inversion", c.pass, brief(c));
  }
  {
    CheckResult c = check_regularity_battery(opt);
    report(9, "regularity battery", c.pass, brief(c, 5));
  }
  {
    CheckResult c = check_refinement(opt);
    report(10, "refinement behavior", c.pass, brief(c, 4));
  }

  {
    // CLI determinism: byte-identical reports for a fixed seed, under 60 s
    fs::path dir = fs::temp_directory_path() / "wulffkit_acceptance";
    fs::create_directories(dir);
    fs::path r1 = dir / "verify1.json", r2 = dir / "verify2.json";
    std::string base = std::string(WULFFKIT_CLI_PATH) +
                       " verify --seed 20260808 >/dev/null 2>&1 --out ";
    auto t0 = std::chrono::steady_clock::now();
    int e1 = WEXITSTATUS(std::system((base + r1.string()).c_str()));
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    int e2 = WEXITSTATUS(std::system((base + r2.string()).c_str()));
    std::string j1 = slurp(r1), j2 = slurp(r2);
    bool pass = e1 == 0 && e2 == 0 && !j1.empty() && j1 == j2 && secs < 60.0;
    char extra[128];
    std::snprintf(extra, sizeof(extra),
                  "exit=%d/%d identical=%s battery_s=%.1f", e1, e2,
                  j1 == j2 ? "true" : "false", secs);
    report(11, "CLI determinism + runtime", pass, extra);
  }

  std::printf("%s\n", g_all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: FAILURES present");
  return g_all_pass ? 0 : 1;
}
