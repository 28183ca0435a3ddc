#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wred/wred.h"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct ProblemFlags {
  std::string setup_file, builtin, algebra_file, triple, grading, isotropic, a, name;
  std::vector<int> partition;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f) {
  cmd->add_option("--setup", f.setup_file, "problem/setup JSON file (other flags override its keys)");
  cmd->add_option("--builtin", f.builtin, "builtin algebra, e.g. sl3");
  cmd->add_option("--partition", f.partition, "Jordan type of f, e.g. 2,1")->delimiter(',');
  cmd->add_option("--algebra", f.algebra_file, "structure-constant JSON file");
  cmd->add_option("--triple", f.triple, "e;h;f for --algebra, as element expressions");
  cmd->add_option("--grading", f.grading, "dynkin, G1, G2, G3 or comma separated basis degrees");
  cmd->add_option("--isotropic", f.isotropic, "basis of the isotropic subspace, ';' separated");
  cmd->add_option("--a", f.a, "element a (expression, or e/h/f)");
  cmd->add_option("--name", f.name, "setup name used in output headers");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in '" + path + "': " + e.what());
  }
}

std::string problem_json(const ProblemFlags& f) {
  json p = json::object();
  if (!f.setup_file.empty()) p = parse_json_file(f.setup_file);
  if (!f.builtin.empty()) p["builtin"] = f.builtin;
  if (!f.partition.empty()) p["partition"] = f.partition;
  if (!f.algebra_file.empty()) p["algebra"] = parse_json_file(f.algebra_file);
  if (!f.triple.empty()) {
    auto t = split(f.triple, ';');
    if (t.size() != 3) throw std::runtime_error("--triple needs three ';' separated elements e;h;f");
    p["triple"] = {{"e", t[0]}, {"h", t[1]}, {"f", t[2]}};
  }
  if (!f.grading.empty()) {
    if (f.grading.find(',') == std::string::npos) {
      p["grading"] = f.grading;
    } else {
      std::vector<int> deg;
      for (const auto& d : split(f.grading, ',')) deg.push_back(std::stoi(d));
      p["grading"] = deg;
    }
  }
  if (!f.isotropic.empty()) p["isotropic"] = split(f.isotropic, ';');
  if (!f.a.empty()) p["a"] = f.a;
  if (!f.name.empty()) p["name"] = f.name;
  if (!p.contains("builtin") && !p.contains("algebra"))
    throw std::runtime_error("no problem given (use --setup, --builtin or --algebra)");
  return p.dump();
}

// Diagnostic for a failed C API call; returns the exit code.
int report(wred_status st) {
  std::cerr << "error: " << wred_status_name(st) << ": " << wred_last_error() << "\n";
  return 10 + static_cast<int>(st);
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << output << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

int cmd_reduce(const ProblemFlags& f, const std::string& method, const std::string& format, const std::string& output) {
  std::string pj = problem_json(f);
  wred_problem* prob = nullptr;
  if (auto st = wred_problem_create(pj.c_str(), &prob)) return report(st);
  wred_result* res = nullptr;
  auto st = wred_reduce(prob, method.c_str(), &res);
  wred_problem_free(prob);
  if (st) return report(st);
  char* text = nullptr;
  st = wred_result_render(res, format.c_str(), &text);
  bool agree = wred_result_methods_agree(res);
  wred_result_free(res);
  if (st) return report(st);
  int rc = emit(text, output);
  wred_string_free(text);
  if (!agree) {
    std::cerr << "error: reduction methods disagree\n";
    return 1;
  }
  return rc;
}

int cmd_verify(const ProblemFlags& f, const std::string& gradings, const std::string& golden, const std::string& lambdas,
               int weight, bool no_jacobi, const std::string& format, const std::string& output) {
  std::string pj = problem_json(f);
  json opt = {{"jacobi_weight", weight}, {"jacobi", !no_jacobi}};
  if (!gradings.empty()) opt["gradings"] = split(gradings, ',');
  if (!lambdas.empty()) opt["lambdas"] = split(lambdas, ',');
  if (!golden.empty()) opt["golden"] = read_file(golden);
  char* rep = nullptr;
  int passed = 0;
  if (auto st = wred_verify(pj.c_str(), opt.dump().c_str(), &rep, &passed)) return report(st);
  std::string text = rep;
  wred_string_free(rep);
  if (format == "text") {
    json r = json::parse(text);
    std::ostringstream os;
    os << "# verify: " << r["setup"].get<std::string>() << "\n";
    for (const auto& c : r["checks"]) {
      os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      std::string d = c["detail"].get<std::string>();
      if (!d.empty()) os << ": " << d;
      os << "\n";
    }
    text = os.str();
  } else if (format != "json") {
    std::cerr << "error: unknown format '" << format << "' (expected text or json)\n";
    return 2;
  }
  int rc = emit(text, output);
  if (!passed) {
    std::cerr << "error: verification failed\n";
    return 1;
  }
  return rc;
}

int cmd_examples(const std::string& name, const std::string& dir) {
  char* bundle = nullptr;
  if (auto st = wred_example_bundle(name.c_str(), &bundle)) return report(st);
  json files = json::parse(bundle);
  wred_string_free(bundle);
  for (const auto& [rel, content] : files.items()) {
    fs::path p = fs::path(dir) / rel;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content.get<std::string>();
    std::cout << p.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical W-algebras by bihamiltonian, Dirac and Drinfeld-Sokolov reduction"};
  app.require_subcommand(1);

  ProblemFlags rf;
  std::string method = "tensor", rformat = "text", routput;
  auto* reduce = app.add_subcommand("reduce", "reduce the pencil to the Slodowy slice and print bracket tables");
  add_problem_flags(reduce, rf);
  reduce->add_option("--method", method, "tensor, dirac, ds, all or a comma separated list");
  reduce->add_option("--format", rformat, "text or json");
  reduce->add_option("-o,--output", routput, "output file (default stdout)");

  ProblemFlags vf;
  std::string gradings, golden, lambdas, vformat = "json", voutput;
  int weight = 3;
  bool no_jacobi = false;
  auto* verify = app.add_subcommand("verify", "run the invariant checks and print a pass/fail report");
  add_problem_flags(verify, vf);
  verify->add_option("--gradings", gradings, "named gradings to compare, e.g. G1,G2,G3");
  verify->add_option("--golden", golden, "expected bracket table (text or JSON)");
  verify->add_option("--lambda", lambdas, "rational lambda samples for the Jacobi check, e.g. -1,1/2,3");
  verify->add_option("--jacobi-weight", weight, "weight bound of the test densities");
  verify->add_flag("--no-jacobi", no_jacobi, "skip the Jacobi check");
  verify->add_option("--format", vformat, "json or text");
  verify->add_option("-o,--output", voutput, "output file (default stdout)");

  std::string ex_name, ex_dir = ".";
  auto* examples = app.add_subcommand("examples", "write the setup files and golden tables of a worked example");
  examples->add_option("name", ex_name, "kdv or fkdv")->required();
  examples->add_option("-d,--dir", ex_dir, "output directory");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*reduce) return cmd_reduce(rf, method, rformat, routput);
    if (*verify) return cmd_verify(vf, gradings, golden, lambdas, weight, no_jacobi, vformat, voutput);
    if (*examples) return cmd_examples(ex_name, ex_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
