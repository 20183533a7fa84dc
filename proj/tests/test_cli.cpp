#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dsu2/cli.hpp"
#include "dsu2/json_io.hpp"
#include "golden_cases.hpp"

using dsu2::io::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_lib(const std::vector<std::string>& args, int* code) {
  std::ostringstream out;
  *code = dsu2::cli::run(args, out);
  return out.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

int run_binary(const std::vector<std::string>& args, const std::string& out_file) {
  std::string cmd = quote(DSU2_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " > " + quote(out_file);
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("golden files") {
  const bool update = std::getenv("DSU2_UPDATE_GOLDEN") != nullptr;
  const std::filesystem::path dir = DSU2_GOLDEN_DIR;
  for (const auto& c : golden_cases()) {
    CAPTURE(c.file);
    int code = -1;
    std::string text = run_lib(c.args, &code);
    CHECK(code == c.exit_code);
    if (update) {
      std::ofstream(dir / c.file, std::ios::binary) << text;
    }
    CHECK(text == slurp(dir / c.file));
    int again = -1;
    CHECK(run_lib(c.args, &again) == text);
  }
}

TEST_CASE("binary exit codes and output destination") {
  auto tmp = std::filesystem::temp_directory_path() / "dsu2_cli_test";
  std::filesystem::create_directories(tmp);
  for (const auto& c : golden_cases()) {
    CAPTURE(c.file);
    CHECK(run_binary(c.args, (tmp / "stdout.json").string()) == c.exit_code);
    CHECK(slurp(tmp / "stdout.json") == slurp(std::filesystem::path(DSU2_GOLDEN_DIR) / c.file));
  }
  CHECK(run_binary({"list-presets", "--output", (tmp / "file.json").string()}, (tmp / "empty.json").string()) == 0);
  CHECK(slurp(tmp / "file.json") == slurp(std::filesystem::path(DSU2_GOLDEN_DIR) / "list_presets.json"));
  CHECK(slurp(tmp / "empty.json").empty());
  std::filesystem::remove_all(tmp);
}

TEST_CASE("golden contents") {
  const std::filesystem::path dir = DSU2_GOLDEN_DIR;
  json presets = json::parse(slurp(dir / "list_presets.json"));
  CHECK(presets["presets"].size() == 9);

  json phi = json::parse(slurp(dir / "su2_phi.json"));
  CHECK(phi["phi"]["terms"][0]["coeffs"] == json({"-2", "-4"}));
  CHECK(json::parse(slurp(dir / "su2_phi_eta.json"))["value"] == "0");

  json dims = json::parse(slurp(dir / "su2_dims.json"));
  for (int N = 1; N <= 4; ++N) {
    const auto& roots = dims["dimensions"][N - 1]["roots"];
    REQUIRE(roots.size() == 1);
    CHECK(roots[0]["valid"] == true);
    CHECK(dsu2::Rational::parse(roots[0]["eta"].get<std::string>()) == dsu2::Rational(-(N - 1), 2));
  }

  json reject = json::parse(slurp(dir / "a21_verify_reject.json"));
  CHECK(reject["report"]["passed"] == false);
  json accept = json::parse(slurp(dir / "a21_verify.json"));
  for (const auto& item : accept["report"]["checks"]) {
    if (item["name"] != "side_condition") CHECK(item["residual"] == 0.0);
  }
  CHECK(json::parse(slurp(dir / "a21_oracle.json"))["agree"] == true);
  CHECK(json::parse(slurp(dir / "error_unknown_preset.json"))["error"]["kind"] == "UnknownPreset");
}

TEST_CASE("phi m = 0 and algebra files") {
  int code = -1;
  json j = json::parse(run_lib({"phi", "--preset", "w3_2", "--param", "c=0", "--m", "0"}, &code));
  CHECK(code == 0);
  CHECK(j["phi"]["terms"].empty());

  j = json::parse(run_lib({"phi", "--preset", "w3_2", "--param", "c=0", "--m", "2", "--eta", "1"}, &code));
  CHECK(j["value"] == "-10");

  auto path = std::filesystem::temp_directory_path() / "dsu2_algebra.json";
  json spec = json::parse(run_lib({"casimir", "--preset", "def_su2", "--param", "phi=0,1"}, &code))["algebra"];
  std::ofstream(path) << spec.dump();
  json via_file = json::parse(run_lib({"dims", "--algebra", path.string(), "--nmax", "3", "--jobs", "2"}, &code));
  CHECK(code == 0);
  json via_preset =
      json::parse(run_lib({"dims", "--preset", "def_su2", "--param", "phi=0,1", "--nmax", "3"}, &code));
  CHECK(via_file["dimensions"] == via_preset["dimensions"]);

  run_lib({"dims", "--algebra", path.string(), "--preset", "a21"}, &code);
  CHECK(code == 2);
  std::filesystem::remove(path);

  j = json::parse(run_lib({"verify", "--algebra", "/nonexistent.json", "--n", "1", "--eta", "0"}, &code));
  CHECK(code == 2);
  CHECK(j["error"]["kind"] == "Parse");
}

TEST_CASE("complex mode and root of unity through the CLI") {
  auto path = std::filesystem::temp_directory_path() / "dsu2_si.json";
  json spec = {{"name", "s_i"},
               {"mode", "complex"},
               {"s", {0.0, 1.0}},
               {"G", {{"terms", {{{"coeffs", {"1", "1"}}, {"base", "1"}}}}}},
               {"f", {{"terms", {{{"coeffs", {"0", "-2"}}, {"base", "1"}}}}}}};
  std::ofstream(path) << spec.dump();
  int code = -1;
  json j = json::parse(
      run_lib({"verify", "--algebra", path.string(), "--n", "2", "--eta", "-0.5,0.5", "--root-of-unity", "4"}, &code));
  CHECK(code == 0);
  CHECK(j["report"]["passed"] == true);
  std::filesystem::remove(path);
}
