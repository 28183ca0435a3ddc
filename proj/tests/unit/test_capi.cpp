#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "wred/wred.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wred_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("reduce through the C API") {
  wred_problem* p = nullptr;
  REQUIRE(wred_problem_create(R"({"builtin": "sl2", "partition": [2], "a": "f"})", &p) == WRED_OK);
  char* name = nullptr;
  REQUIRE(wred_problem_name(p, &name) == WRED_OK);
  CHECK(take(name) == "sl2 dynkin a=e21");
  wred_result* r = nullptr;
  REQUIRE(wred_reduce(p, "all", &r) == WRED_OK);
  CHECK(wred_result_methods_agree(r) == 1);
  char* table = nullptr;
  REQUIRE(wred_result_table(r, "Plambda", "text", &table) == WRED_OK);
  std::string t = take(table);
  CHECK(t.find("{q1(x), q1(y)} = (-1/2*eps^3)*delta^(3)(x-y) + (2*eps*lam + 2*eps*q1_0)*delta^(1)(x-y) + (eps*q1_1)*delta(x-y)") !=
        std::string::npos);
  char* doc = nullptr;
  REQUIRE(wred_result_render(r, "json", &doc) == WRED_OK);
  CHECK(json::parse(take(doc))["methods"].size() == 3);
  CHECK(wred_result_table(r, "P3", "text", &table) == WRED_INVALID_ARGUMENT);
  CHECK(std::string(wred_last_error()).find("P3") != std::string::npos);
  wred_result_free(r);
  char* sj = nullptr;
  REQUIRE(wred_problem_setup_json(p, &sj) == WRED_OK);
  CHECK(json::parse(take(sj)).contains("algebra"));
  wred_problem_free(p);
}

TEST_CASE("error codes") {
  wred_problem* p = nullptr;
  CHECK(wred_problem_create("{oops", &p) == WRED_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(wred_last_error()).size() > 0);
  CHECK(wred_problem_create(R"({"builtin": "sl3", "partition": [2, 1], "isotropic": ["e21", "e32"]})", &p) == WRED_NOT_ISOTROPIC);
  CHECK(wred_problem_create(R"({"builtin": "sl3", "partition": [2, 1], "isotropic": ["e21+e32"], "a": "e21-e32"})", &p) ==
        WRED_A_CONDITION);
  CHECK(wred_problem_create(nullptr, &p) == WRED_INVALID_ARGUMENT);
  CHECK(wred_reduce(nullptr, "all", nullptr) == WRED_INVALID_ARGUMENT);
  CHECK(std::string(wred_status_name(WRED_NO_FINITE_ORDER_INVERSE)) == "no finite-order inverse");
  REQUIRE(wred_problem_create(R"({"builtin": "sl2", "partition": [2]})", &p) == WRED_OK);
  wred_result* r = nullptr;
  CHECK(wred_reduce(p, "fastest", &r) == WRED_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  wred_problem_free(p);
  wred_problem_free(nullptr);
  wred_result_free(nullptr);
}

TEST_CASE("verify and examples through the C API") {
  char* rep = nullptr;
  int passed = -1;
  REQUIRE(wred_verify(R"({"builtin": "sl2", "partition": [2], "a": "f"})", R"({"lambdas": ["-2", "1/3"]})", &rep, &passed) ==
          WRED_OK);
  CHECK(passed == 1);
  CHECK(json::parse(take(rep))["passed"] == true);
  CHECK(wred_verify(R"({"builtin": "sl2", "partition": [2]})", R"({"lambdas": ["0.5"]})", &rep, &passed) == WRED_PARSE);

  char* bundle = nullptr;
  REQUIRE(wred_example_bundle("kdv", &bundle) == WRED_OK);
  json b = json::parse(take(bundle));
  CHECK(b.contains("setups/kdv.json"));
  CHECK(b.contains("golden/kdv_P2.txt"));
  CHECK(wred_example_bundle("nls", &bundle) == WRED_UNKNOWN_EXAMPLE);
  CHECK(std::string(wred_last_error()).find("kdv") != std::string::npos);
}
