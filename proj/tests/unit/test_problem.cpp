#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wred/error.hpp"
#include "wred/examples.hpp"
#include "wred/problem.hpp"
#include "wred/verify.hpp"

using namespace wred;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("problem resolution errors") {
  CHECK(code_of([] { resolve_setup(json::parse("[]")); }) == ErrorCode::Parse);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"partition": [2]})")); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"builtin": "so5", "partition": [2]})")); }) != ErrorCode::Internal);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"builtin": "sl2", "partition": [3]})")); }) != ErrorCode::Internal);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "grading": "G7"})")); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"builtin": "sl2", "partition": [2], "grading": "G1"})")); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { resolve_setup(json::parse(R"({"builtin": "sl2", "partition": [2], "a": 0.5})")); }) != ErrorCode::Internal);
}

TEST_CASE("method selector") {
  CHECK(parse_methods("all").size() == 3);
  CHECK(parse_methods("dirac,ds").size() == 2);
  CHECK_THROWS_AS(parse_methods("magic"), Error);
  CHECK_THROWS_AS(parse_methods(""), Error);
}

TEST_CASE("setup files reload to the same setup") {
  auto s = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "grading": "G1", "isotropic": ["e21+e32"], "a": "e21+e32"})"));
  json j = setup_to_json(*s);
  auto back = resolve_setup(j);
  CHECK(back->name() == s->name());
  CHECK(back->b_minus() == s->b_minus());
  CHECK(tensor_procedure(*back) == tensor_procedure(*s));
}

TEST_CASE("rendering is deterministic and parseable") {
  auto s = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "a": "e31"})"));
  auto out = run_reduction(*s, parse_methods("all"));
  CHECK(out.comparison.all_equal);
  std::string a = render_reduction(*s, out, "text"), b = render_reduction(*s, run_reduction(*s, parse_methods("all")), "text");
  CHECK(a == b);
  json j = json::parse(render_reduction(*s, out, "json"));
  CHECK(j["methods_agree"] == true);
  CHECK(parse_table_json(j["tables"]["P2"]).entries.size() == 7);
  CHECK_THROWS_AS(render_reduction(*s, out, "xml"), Error);
}

TEST_CASE("example bundles") {
  auto kdv = example_bundle("kdv");
  bool has_setup = false, has_golden = false;
  for (const auto& [path, content] : kdv) {
    CHECK(path.find("fkdv") == std::string::npos);
    has_setup = has_setup || path == "setups/kdv.json";
    has_golden = has_golden || path == "golden/kdv_Plambda.txt";
  }
  CHECK(has_setup);
  CHECK(has_golden);
  auto fkdv = example_bundle("fkdv");
  CHECK(fkdv.size() >= 10);
  for (const auto& [path, content] : fkdv)
    if (path.rfind("setups/", 0) == 0) CHECK_NOTHROW(resolve_setup(json::parse(content)));
  try {
    example_bundle("mkdv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownExample);
    CHECK(std::string(e.what()).find("kdv, fkdv") != std::string::npos);
  }
}

TEST_CASE("shipped golden tables match fresh reductions") {
  for (const auto& [path, content] : embedded_files()) {
    if (path.rfind("golden/", 0) != 0) continue;
    BracketTable g = parse_table_text(content);
    std::string setup = std::string(path.substr(7));
    setup = setup.substr(0, setup.rfind('_'));
    if (setup == "fkdv") setup = "fkdv_G1_a_e31";
    auto s = resolve_setup(json::parse(embedded_file("setups/" + setup + ".json")));
    MatDiffOp pen = tensor_procedure(*s);
    MatDiffOp op = g.structure == "P2" ? p2_part(pen) : g.structure == "P1" ? p1_part(pen) : pen;
    auto d = first_table_difference(g, make_table(op, s->name(), g.structure));
    CHECK_MESSAGE(!d, path, ": ", d.value_or(""));
  }
}

TEST_CASE("verification report") {
  json kdv = json::parse(R"({"builtin": "sl2", "partition": [2], "a": "f"})");
  VerifyOptions opt;
  opt.jacobi_weight = 4;
  VerifyReport rep = verify_problem(kdv, opt);
  CHECK(rep.passed());
  std::vector<std::string> names;
  for (const auto& c : rep.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"method_agreement", "skew", "lambda_linear", "jacobi", "casimir", "leading_term"});
  CHECK(rep.to_json()["passed"] == true);

  opt.golden = parse_table_text(embedded_file("golden/kdv_P2.txt"));
  opt.golden->entries.begin()->second.add(2, DiffPoly(1));
  VerifyReport bad = verify_problem(kdv, opt);
  CHECK_FALSE(bad.passed());
  CHECK(bad.checks.back().name == "golden");
  CHECK(bad.checks.back().detail.find("{q1(x), q1(y)}") != std::string::npos);
}

TEST_CASE("grading independence check") {
  json p = json::parse(R"({"builtin": "sl3", "partition": [2, 1], "grading": "G1", "isotropic": ["e21+e32"], "a": "e21+e32"})");
  VerifyOptions opt;
  opt.jacobi = false;
  opt.gradings = {"G1", "G2", "G3"};
  VerifyReport rep = verify_problem(p, opt);
  CHECK(rep.passed());
  CHECK(rep.checks.back().name == "grading_independence");
}
