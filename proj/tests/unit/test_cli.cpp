#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WRED_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  Run r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(WRED_DATA_DIR) + "/" + rel; }

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("wred_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("reduce FKdV with all methods") {
  Run r = run("reduce --builtin sl3 --partition 2,1 --grading dynkin --a e31 --method all");
  CHECK(r.code == 0);
  CHECK(r.out.find("(agree)") != std::string::npos);
  CHECK(r.out.find("{q4(x), q4(y)} = (1/6*eps)*delta^(1)(x-y)") != std::string::npos);
  CHECK(r.out.find("# structure: P1") != std::string::npos);
  CHECK(r.out.find("# structure: Plambda") != std::string::npos);
}

TEST_CASE("reduce KdV to a file is deterministic") {
  fs::path d = temp_dir();
  std::string a = (d / "a.txt").string(), b = (d / "b.json").string(), c = (d / "c.json").string();
  CHECK(run("reduce --builtin sl2 --partition 2 --a f -o " + a).code == 0);
  CHECK(run("reduce --builtin sl2 --partition 2 --a f --format json -o " + b).code == 0);
  CHECK(run("reduce --builtin sl2 --partition 2 --a f --format json -o " + c).code == 0);
  std::ifstream fb(b), fc(c);
  std::string sb((std::istreambuf_iterator<char>(fb)), {}), sc((std::istreambuf_iterator<char>(fc)), {});
  CHECK(sb == sc);
  CHECK(json::parse(sb)["setup"] == "sl2 dynkin a=e21");
  fs::remove_all(d);
}

TEST_CASE("error paths exit nonzero with a diagnostic") {
  fs::path d = temp_dir();
  std::string bad = (d / "bad.json").string();
  std::ofstream(bad) << "{\"builtin\": \"sl3\",";
  Run r = run("reduce --setup " + bad);
  CHECK(r.code != 0);
  CHECK(r.out.find("parse error") != std::string::npos);

  r = run("reduce --builtin sl3 --partition 2,1 --isotropic 'e21+e32' --a 'e21-e32'");
  CHECK(r.code != 0);
  CHECK(r.out.find("condition on a") != std::string::npos);

  r = run("reduce --builtin sl3 --partition 2,1 --isotropic 'e21;e32'");
  CHECK(r.code != 0);
  CHECK(r.out.find("isotropic") != std::string::npos);

  r = run("reduce --builtin sl3 --partition 2,1 --grading 0,0,0,0,0,0,0,0");
  CHECK(r.code != 0);
  CHECK(r.out.find("grading") != std::string::npos);

  r = run("reduce");
  CHECK(r.code != 0);
  fs::remove_all(d);
}

TEST_CASE("verify with golden files") {
  Run r = run("verify --setup " + data("setups/kdv.json") + " --golden " + data("golden/kdv_Plambda.txt") + " --lambda -1,1/2,3");
  CHECK(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["passed"] == true);

  fs::path d = temp_dir();
  std::string corrupt = (d / "corrupt.txt").string();
  {
    std::ifstream in(data("golden/fkdv_P2.txt"));
    std::string text((std::istreambuf_iterator<char>(in)), {});
    text.replace(text.find("1/6*eps"), 7, "1/7*eps");
    std::ofstream(corrupt) << text;
  }
  r = run("verify --setup " + data("setups/fkdv_G3_a_e21.json") + " --no-jacobi --format text --golden " + corrupt);
  CHECK(r.code != 0);
  CHECK(r.out.find("FAIL golden") != std::string::npos);
  CHECK(r.out.find("{q4(x), q4(y)}") != std::string::npos);

  r = run("verify --setup " + data("setups/kdv.json") + " --lambda 0.5");
  CHECK(r.code != 0);
  fs::remove_all(d);
}

TEST_CASE("verify grading independence") {
  Run r = run("verify --builtin sl3 --partition 2,1 --a e31 --no-jacobi --gradings G1,G2,G3 --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS grading_independence") != std::string::npos);
}

TEST_CASE("examples command") {
  fs::path d = temp_dir();
  Run r = run("examples fkdv -d " + d.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(d / "golden" / "fkdv_P2.txt"));
  CHECK(fs::exists(d / "setups" / "fkdv_G1_l_plus.json"));
  r = run("reduce --setup " + (d / "setups" / "fkdv_G2_a_e32.json").string() + " --method dirac");
  CHECK(r.code == 0);
  r = run("examples sine-gordon");
  CHECK(r.code != 0);
  CHECK(r.out.find("available: kdv, fkdv") != std::string::npos);
  fs::remove_all(d);
}
