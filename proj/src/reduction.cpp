#include "wred/reduction.hpp"

#include <cstdint>

#include "wred/error.hpp"

namespace wred {

std::vector<std::vector<DiffPoly>> leading_term(const MatDiffOp& r) {
  std::vector<std::vector<DiffPoly>> out(r.rows(), std::vector<DiffPoly>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out[i][j] = r(i, j).coeff(0).eps_coeff(0);
  return out;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Tensor: return "tensor";
    case Method::Dirac: return "dirac";
    case Method::DS: return "ds";
  }
  return "?";
}

MatDiffOp reduce(const GradedSetup& s, Method m) {
  switch (m) {
    case Method::Tensor: return tensor_procedure(s);
    case Method::Dirac: return dirac_reduce(s).reduced;
    case Method::DS: return ds_reduce(s);
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

namespace {

std::string first_difference(const MatDiffOp& a, const MatDiffOp& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shapes differ";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j)))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + to_string(a(i, j), "q") +
               " vs " + to_string(b(i, j), "q");
  return {};
}

}  // namespace

ComparisonReport compare_methods(const std::vector<SetupPtr>& setups, const std::vector<Method>& methods) {
  ComparisonReport rep;
  std::size_t ref = SIZE_MAX;
  for (const auto& s : setups)
    for (auto m : methods) {
      ComparisonReport::Run run{s->name(), method_name(m), {}};
      MatDiffOp r;
      try {
        r = reduce(*s, m);
      } catch (const Error& e) {
        run.error = e.what();
        rep.all_equal = false;
        if (rep.first_mismatch.empty()) rep.first_mismatch = run.setup + "/" + run.method + " failed: " + e.what();
      }
      rep.runs.push_back(run);
      rep.results.push_back(r);
      if (!run.error.empty()) continue;
      if (ref == SIZE_MAX) {
        ref = rep.runs.size() - 1;
      } else if (!(rep.results[ref] == r)) {
        rep.all_equal = false;
        if (rep.first_mismatch.empty())
          rep.first_mismatch = rep.runs[ref].setup + "/" + rep.runs[ref].method + " vs " + run.setup + "/" +
                               run.method + ": " + first_difference(rep.results[ref], r);
      }
    }
  return rep;
}

}  // namespace wred
