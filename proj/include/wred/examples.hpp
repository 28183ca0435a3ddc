#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wred {

// Data files compiled into the library (paths relative to data/).
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_files();

std::vector<std::string> example_names();

// Setup files and golden tables of a worked example: (relative path, contents).
std::vector<std::pair<std::string, std::string>> example_bundle(const std::string& name);

// Contents of one embedded file; throws InvalidArgument when missing.
std::string embedded_file(const std::string& path);

}  // namespace wred
