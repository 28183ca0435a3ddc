#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "wred/diffop.hpp"

namespace wred {

using json = nlohmann::json;

// Terms as [coef, lam, eps, [[field, order, exp], ...]] with 1-based fields.
json diffpoly_to_json(const DiffPoly& p);
DiffPoly diffpoly_from_json(const json& j);

// Bracket table of a square operator: one entry per pair i <= j with a nonzero
// operator, {q_i(x), q_j(y)} = (1/eps) sum_k C_k(x) delta^(k)(x-y).
struct BracketTable {
  std::string name;
  std::string structure;  // "P2", "P1" or "Plambda"
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, LinDiffOp> entries;  // 0-based (i, j), i <= j
};

BracketTable make_table(const MatDiffOp& op, std::string name, std::string structure);

std::string render_table_text(const BracketTable& t);
json render_table_json(const BracketTable& t);
BracketTable parse_table_text(std::string_view text);
BracketTable parse_table_json(const json& j);

// One bracket line, e.g. "{q1(x), q2(y)} = (3/2*eps*q2_0)*delta^(1)(x-y) + ...".
std::string render_entry(std::size_t i, std::size_t j, const LinDiffOp& op);

// Description of the first entry where the tables differ (pairs in order), or nothing.
std::optional<std::string> first_table_difference(const BracketTable& expected, const BracketTable& actual);

}  // namespace wred
