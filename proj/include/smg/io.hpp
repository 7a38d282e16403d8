#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "smg/adapters.hpp"
#include "smg/extensive.hpp"
#include "smg/instance.hpp"

namespace smg {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field path or the
/// line and column of a syntax error.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);
std::string dump(const Json& j);

Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& r);

Game game_from_json(const Json& j, const std::string& where = "game");
Json game_to_json(const Game& g);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

MatchingProfile profile_from_json(const Instance& inst, const Json& j);
Json profile_to_json(const Instance& inst, const MatchingProfile& pi);

GameTree tree_from_json(const Json& j);
Json tree_to_json(const GameTree& tree);

OrdinalModel ordinal_from_json(const Json& j);
ShapleyShubikModel shapley_shubik_from_json(const Json& j);
GaleDemangeModel gale_demange_from_json(const Json& j);
ContractsModel contracts_from_json(const Json& j);

}  // namespace smg
