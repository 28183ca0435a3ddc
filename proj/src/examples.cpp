#include "wred/examples.hpp"

#include "wred/error.hpp"

namespace wred {

std::vector<std::string> example_names() { return {"kdv", "fkdv"}; }

std::vector<std::pair<std::string, std::string>> example_bundle(const std::string& name) {
  bool known = false;
  for (const auto& n : example_names()) known = known || n == name;
  if (!known) {
    std::string list;
    for (const auto& n : example_names()) list += (list.empty() ? "" : ", ") + n;
    fail(ErrorCode::UnknownExample, "unknown example '" + name + "'; available: " + list);
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [path, content] : embedded_files()) {
    auto slash = path.find('/');
    std::string_view base = path.substr(slash + 1);
    if (base.substr(0, name.size()) != name) continue;
    if (base.size() > name.size() && base[name.size()] != '_' && base[name.size()] != '.') continue;
    out.emplace_back(std::string(path), std::string(content));
  }
  return out;
}

std::string embedded_file(const std::string& path) {
  for (const auto& [p, content] : embedded_files())
    if (p == path) return std::string(content);
  fail(ErrorCode::InvalidArgument, "no embedded file '" + path + "'");
}

}  // namespace wred
