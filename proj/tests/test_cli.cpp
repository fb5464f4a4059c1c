#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wulffkit/io.hpp"

namespace fs = std::filesystem;

namespace {

const char* kCli = WULFFKIT_CLI_PATH;

fs::path workdir() {
  fs::path dir = fs::temp_directory_path() / "wulffkit_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  std::string cmd = std::string(kCli) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("cli build writes deterministic SVG polygons") {
  fs::path dir = workdir();
  fs::path spec = dir / "unit.json";
  spit(spec, R"({"n": 1, "preset": "constant", "params": {"r": 1.0}})");
  fs::path out1 = dir / "a.svg", out2 = dir / "b.svg";
  CHECK(run("build " + spec.string() + " --mesh 256 --out " + out1.string()) == 0);
  CHECK(run("build " + spec.string() + " --mesh 256 --out " + out2.string()) == 0);
  std::string svg = slurp(out1);
  CHECK(svg == slurp(out2));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
}

TEST_CASE("cli build emits canonical OBJ for the cube") {
  fs::path dir = workdir();
  fs::path spec = dir / "cube.json";
  spit(spec, R"({"n": 2, "preset": "cube"})");
  fs::path out = dir / "cube.obj";
  CHECK(run("build " + spec.string() + " --mesh 3 --out " + out.string()) == 0);
  std::string obj = slurp(out);
  int verts = 0, faces = 0;
  std::istringstream lines(obj);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("v ", 0) == 0) ++verts;
    if (line.rfind("f ", 0) == 0) ++faces;
  }
  CHECK(verts == 8);
  CHECK(faces == 6);  // coplanar fans merged to quads
}

TEST_CASE("cli exit codes: parse, numeric, usage") {
  fs::path dir = workdir();
  fs::path bad = dir / "bad.json";
  spit(bad, "{\"n\": 1, ");  // malformed
  CHECK(run("build " + bad.string() + " --out " + (dir / "x.svg").string()) == 2);

  fs::path lens3d = dir / "lens3d.json";
  spit(lens3d, R"({"n": 2, "preset": "lens"})");
  CHECK(run("build " + lens3d.string() + " --out " + (dir / "y.obj").string()) == 2);

  CHECK(run("definitely-not-a-command") == 1);

  // pedal with an exterior point is a numeric error
  fs::path unit = dir / "unit2.json";
  spit(unit, R"({"n": 1, "preset": "constant"})");
  CHECK(run("pedal " + unit.string() + " --point 5,5 --out " +
            (dir / "p.svg").string()) == 3);
}

TEST_CASE("cli integrand CSV flags the lens kink cone") {
  fs::path dir = workdir();
  fs::path spec = dir / "lens.json";
  spit(spec, R"({"n": 1, "preset": "lens"})");
  fs::path out = dir / "lens.csv";
  CHECK(run("integrand " + spec.string() + " --mesh 512 --out " + out.string()) == 0);
  std::istringstream lines(slurp(out));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "dir_0,dir_1,gamma,gamma_w,equal");
  int rows = 0, false_rows = 0;
  bool top_false = false;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find("false") != std::string::npos) {
      ++false_rows;
      // the top of the kink cone: gamma 1 vs gamma_w near sqrt(3)/2
      if (line.find(",1,0.86") != std::string::npos) top_false = true;
    }
  }
  CHECK(rows == 512);
  CHECK(false_rows > 100);
  CHECK(top_false);
}

TEST_CASE("cli dual reports the reflected-polar residual") {
  fs::path dir = workdir();
  fs::path spec = dir / "ball2.json";
  spit(spec, R"({"n": 1, "preset": "constant", "params": {"r": 2.0}})");
  fs::path out = dir / "dual.svg";
  std::string cmd = std::string(kCli) + " dual " + spec.string() +
                    " --mesh 256 --out " + out.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string stdout_text;
  char buf[256];
  while (fgets(buf, sizeof(buf), pipe)) stdout_text += buf;
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(stdout_text.find("reflected_polar_residual") != std::string::npos);
  CHECK(stdout_text.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("cli analyze emits the lens report with the admissibility flag") {
  fs::path dir = workdir();
  fs::path spec = dir / "lens2.json";
  spit(spec, R"({"n": 1, "preset": "lens"})");
  fs::path out = dir / "lens_report.json";
  CHECK(run("analyze " + spec.string() + " --levels 128,256,512 --out " +
            out.string()) == 0);
  std::string json = slurp(out);
  CHECK(json.find("\"verdict\": \"consistent\"") != std::string::npos);
  CHECK(json.find("\"nonsmooth_admissible\": true") != std::string::npos);
  CHECK(json.find("\"schema\": \"wulffkit-report/1\"") != std::string::npos);
}

TEST_CASE("cli verify quick battery is deterministic and passes") {
  fs::path dir = workdir();
  fs::path r1 = dir / "verify1.json", r2 = dir / "verify2.json";
  std::string flags = " --quick --probes 400 --s1-level 256 --s2-level 3 --seed 777";
  CHECK(run("verify" + flags + " --out " + r1.string()) == 0);
  CHECK(run("verify" + flags + " --out " + r2.string()) == 0);
  std::string a = slurp(r1);
  CHECK(a == slurp(r2));
  CHECK(a.find("\"all_pass\": true") != std::string::npos);
  CHECK(a.find("wall_ms") == std::string::npos);  // timings stay off canonical reports

  // raising the tolerance band keeps it passing; an absurdly tight band
  // fails with exit 4 but still writes the report
  CHECK(run("verify" + flags + " --tol 1000 --out " + (dir / "v3.json").string()) == 0);
  fs::path tight = dir / "v4.json";
  CHECK(run("verify" + flags + " --tol 1e-12 --out " + tight.string()) == 4);
  CHECK(slurp(tight).find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("cli build overlays add layers to the figure") {
  fs::path dir = workdir();
  fs::path spec = dir / "lens_fig.json";
  spit(spec, R"({"n": 1, "preset": "lens"})");
  fs::path out = dir / "lens_fig.svg";
  CHECK(run("build " + spec.string() +
            " --mesh 256 --hull-overlay --integrand-overlay --out " +
            out.string()) == 0);
  std::string svg = slurp(out);
  size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    ++pos;
  }
  CHECK(paths == 4);  // shape, hull, integrand graph, gamma graph
}

TEST_CASE("cli respects the seed environment override") {
  fs::path dir = workdir();
  fs::path out = dir / "env_report.json";
  std::string cmd = "WULFFKIT_SEED=123456 " + std::string(kCli) +
                    " verify --quick --probes 200 --s1-level 128 --s2-level 2 --out " +
                    out.string() + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out).find("\"seed\": 123456") != std::string::npos);
}
