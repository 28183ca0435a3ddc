#include "wred/wred.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

#include "wred/error.hpp"
#include "wred/examples.hpp"
#include "wred/problem.hpp"
#include "wred/verify.hpp"

using namespace wred;

struct wred_problem {
  SetupPtr setup;
};

struct wred_result {
  SetupPtr setup;
  ReductionOutput out;
};

namespace {

thread_local std::string last_error;

wred_status set_error(wred_status st, const std::string& msg) {
  last_error = msg;
  return st;
}

template <class F>
wred_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return WRED_OK;
  } catch (const Error& e) {
    return set_error(static_cast<wred_status>(e.code()), e.what());
  } catch (const json::exception& e) {
    return set_error(WRED_PARSE, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(WRED_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(WRED_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

BracketTable table_of(const wred_result& r, const std::string& structure) {
  if (structure == "P2") return make_table(p2_part(r.out.pencil), r.setup->name(), "P2");
  if (structure == "P1") return make_table(p1_part(r.out.pencil), r.setup->name(), "P1");
  if (structure == "Plambda") return make_table(r.out.pencil, r.setup->name(), "Plambda");
  fail(ErrorCode::InvalidArgument, "unknown structure '" + structure + "' (expected P1, P2 or Plambda)");
}

}  // namespace

extern "C" {

const char* wred_last_error(void) { return last_error.c_str(); }

const char* wred_status_name(wred_status st) {
  switch (st) {
    case WRED_OK: return "ok";
    case WRED_INVALID_ARGUMENT: return "invalid argument";
    case WRED_PARSE: return "parse error";
    case WRED_INVALID_DIMENSION: return "invalid dimension";
    case WRED_BAD_TRIPLE: return "bad sl2-triple";
    case WRED_BAD_GRADING: return "bad grading";
    case WRED_NOT_ISOTROPIC: return "subspace not isotropic";
    case WRED_A_CONDITION: return "condition on a fails";
    case WRED_DEGENERATE_FORM: return "degenerate form";
    case WRED_NO_FINITE_ORDER_INVERSE: return "no finite-order inverse";
    case WRED_SHAPE_MISMATCH: return "shape mismatch";
    case WRED_UNKNOWN_EXAMPLE: return "unknown example";
    case WRED_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wred_string_free(char* s) { std::free(s); }

wred_status wred_problem_create(const char* problem_json, wred_problem** out) {
  return guarded([&] {
    need(problem_json, "problem_json");
    need(out, "out");
    *out = nullptr;
    auto p = std::make_unique<wred_problem>();
    p->setup = resolve_setup(json::parse(problem_json));
    *out = p.release();
  });
}

void wred_problem_free(wred_problem* p) { delete p; }

wred_status wred_problem_name(const wred_problem* p, char** out) {
  return guarded([&] {
    need(p, "problem");
    need(out, "out");
    *out = dup(p->setup->name());
  });
}

wred_status wred_problem_setup_json(const wred_problem* p, char** out) {
  return guarded([&] {
    need(p, "problem");
    need(out, "out");
    *out = dup(setup_to_json(*p->setup).dump(2) + "\n");
  });
}

wred_status wred_reduce(const wred_problem* p, const char* methods, wred_result** out) {
  return guarded([&] {
    need(p, "problem");
    need(out, "out");
    *out = nullptr;
    auto r = std::make_unique<wred_result>();
    r->setup = p->setup;
    r->out = run_reduction(*p->setup, parse_methods(methods ? methods : "tensor"));
    *out = r.release();
  });
}

void wred_result_free(wred_result* r) { delete r; }

int wred_result_methods_agree(const wred_result* r) { return r && r->out.comparison.all_equal ? 1 : 0; }

wred_status wred_result_render(const wred_result* r, const char* format, char** out) {
  return guarded([&] {
    need(r, "result");
    need(out, "out");
    *out = dup(render_reduction(*r->setup, r->out, format ? format : "text"));
  });
}

wred_status wred_result_table(const wred_result* r, const char* structure, const char* format, char** out) {
  return guarded([&] {
    need(r, "result");
    need(structure, "structure");
    need(out, "out");
    BracketTable t = table_of(*r, structure);
    std::string f = format ? format : "text";
    if (f == "text")
      *out = dup(render_table_text(t));
    else if (f == "json")
      *out = dup(render_table_json(t).dump(2) + "\n");
    else
      fail(ErrorCode::InvalidArgument, "unknown format '" + f + "' (expected text or json)");
  });
}

wred_status wred_verify(const char* problem_json, const char* options_json, char** report_json, int* passed) {
  return guarded([&] {
    need(problem_json, "problem_json");
    need(report_json, "report_json");
    VerifyOptions opt;
    if (options_json) {
      json o = json::parse(options_json);
      if (o.contains("gradings")) opt.gradings = o.at("gradings").get<std::vector<std::string>>();
      if (o.contains("lambdas")) {
        opt.lambdas.clear();
        for (const auto& l : o.at("lambdas")) opt.lambdas.push_back(parse_rational(l.get<std::string>()));
      }
      opt.jacobi_weight = o.value("jacobi_weight", opt.jacobi_weight);
      opt.jacobi = o.value("jacobi", opt.jacobi);
      opt.seed = o.value("seed", opt.seed);
      if (o.contains("golden")) {
        std::string g = o.at("golden").get<std::string>();
        auto first = g.find_first_not_of(" \t\r\n");
        opt.golden = first != std::string::npos && g[first] == '{' ? parse_table_json(json::parse(g)) : parse_table_text(g);
      }
    }
    VerifyReport rep = verify_problem(json::parse(problem_json), opt);
    *report_json = dup(rep.to_json().dump(2) + "\n");
    if (passed) *passed = rep.passed() ? 1 : 0;
  });
}

wred_status wred_example_bundle(const char* name, char** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    json j = json::object();
    for (const auto& [path, content] : example_bundle(name)) j[path] = content;
    *out = dup(j.dump(2) + "\n");
  });
}

}  // extern "C"
