#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(REALCURVE_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cli output matches golden files") {
  for (const auto& [args, golden] : {std::pair{std::string("analyze ") + fixture("cubic_isolated"), "cubic_isolated_analyze.json"},
                                     std::pair{std::string("analyze ") + fixture("nodal"), "nodal_analyze.json"},
                                     std::pair{std::string("function ") + fixture("nodal") + " 0", "nodal_function_0.json"}}) {
    CAPTURE(args);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/" + golden));
  }
}

TEST_CASE("cli output is stable across runs") {
  const std::string args = "analyze " + fixture("cissoid");
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("cli exit codes") {
  CHECK(run("analyze /nonexistent/manifest.json").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("function " + fixture("nodal") + " 17").code == 2);
  // regularity of y/x on the cusp is out of reach of the degree search
  const Run unknown = run("function " + fixture("cuspidal") + " 0");
  CHECK(unknown.code == 3);
  CHECK(nlohmann::json::parse(unknown.out)["regular"]["status"] == "unknown");

  const auto dir = std::filesystem::temp_directory_path() / "realcurve_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"f": "x^2 + + y"})";
  CHECK(run("analyze " + bad.string()).code == 2);
  std::ofstream(bad) << R"({"f": )";
  CHECK(run("analyze " + bad.string()).code == 2);
}

TEST_CASE("cli one-line json and option override") {
  const Run r = run("function " + fixture("nodal") + " 0 --json-indent -1");
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") == 1);
  const Run d = run("function " + fixture("cuspidal") + " 0 --degree-bound 3");
  CHECK(d.code == 3);
  CHECK(nlohmann::json::parse(d.out)["regular"]["bound_used"] == "degree bound D=3");
}

TEST_CASE("cli plot") {
  const auto dir = std::filesystem::temp_directory_path() / "realcurve_cli_test";
  std::filesystem::create_directories(dir);
  const auto circle = (dir / "circle.svg").string(), empty = (dir / "empty.svg").string(),
             cubic = (dir / "cubic.svg").string();
  REQUIRE(run("plot " + fixture("circle") + " " + circle).code == 0);
  REQUIRE(run("plot " + fixture("empty") + " " + empty).code == 0);
  REQUIRE(run("plot " + fixture("cubic_isolated") + " " + cubic).code == 0);
  CHECK(count(slurp(circle), "<polyline") == 1);
  CHECK(count(slurp(empty), "<polyline") == 0);
  const std::string c = slurp(cubic);
  CHECK(count(c, "class=\"isolated\"") == 1);
  CHECK(run("plot " + fixture("circle") + " /nonexistent/dir/out.svg").code == 2);
}
