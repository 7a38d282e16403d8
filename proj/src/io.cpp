#include "smg/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace smg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string string_from(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_from(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(string_from(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::size_t index_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Matrix matrix_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  Matrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].empty()) fail(rw, "expected a non-empty row");
    if (r && j[r].size() != j[0].size()) fail(rw, "row length differs from the first row");
    m.emplace_back();
    for (std::size_t c = 0; c < j[r].size(); ++c) m.back().push_back(rational_from_json(j[r][c], rw + "[" + std::to_string(c) + "]"));
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

// Either [[x, y], ...] breakpoints or {"slope": a, "intercept": b}.
PiecewiseLinear map_from(const Json& j, const std::string& where) {
  try {
    if (j.is_object()) {
      return PiecewiseLinear::affine(rational_from_json(field(j, "slope", where), where + ".slope"),
                                     rational_from_json(field(j, "intercept", where), where + ".intercept"));
    }
    if (!j.is_array()) fail(where, "expected breakpoints or {slope, intercept}");
    std::vector<PiecewiseLinear::Breakpoint> pts;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string pw = where + "[" + std::to_string(k) + "]";
      if (!j[k].is_array() || j[k].size() != 2) fail(pw, "expected an [x, y] pair");
      pts.emplace_back(rational_from_json(j[k][0], pw + "[0]"), rational_from_json(j[k][1], pw + "[1]"));
    }
    return PiecewiseLinear(std::move(pts));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Json map_to_json(const PiecewiseLinear& f) {
  Json out = Json::array();
  for (const auto& [x, y] : f.breakpoints()) out.push_back(Json::array({rational_to_json(x), rational_to_json(y)}));
  return out;
}

PriceGrid grid_from(const Json& j, const std::string& where) {
  return {rational_from_json(field(j, "min", where), where + ".min"),
          rational_from_json(field(j, "max", where), where + ".max"),
          rational_from_json(field(j, "step", where), where + ".step")};
}

std::size_t find_name(const std::vector<std::string>& names, const std::string& name, const std::string& where) {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return k;
  }
  fail(where, "unknown agent '" + name + "'");
}

std::vector<Rational> irp_from(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  std::vector<Rational> out(names.size());
  if (j.is_null()) return out;
  if (!j.is_object()) fail(where, "expected an object mapping names to payoffs");
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[find_name(names, it.key(), where)] = rational_from_json(it.value(), where + "." + it.key());
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, "bad number '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_float()) fail(where, "write non-integer numbers as strings (\"1/2\" or \"0.5\")");
  fail(where, "expected a number");
}

// Small integers as JSON numbers, everything else as "p/q" text.
Json rational_to_json(const Rational& r) {
  const mpz_class& n = r.raw().get_num();
  if (r.is_integer() && n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return r.str();
}

Game game_from_json(const Json& j, const std::string& where) {
  const std::string cls = string_from(field(j, "class", where), where + ".class");
  auto mat = [&](const char* key) { return matrix_from(field(j, key, where), where + "." + key); };
  auto num = [&](const char* key) { return rational_from_json(field(j, key, where), where + "." + key); };
  auto fn = [&](const char* key) { return map_from(field(j, key, where), where + "." + key); };
  try {
    if (cls == "bimatrix") return Game::bimatrix(mat("U"), mat("V"));
    if (cls == "zero-sum") return Game::zero_sum(mat("g"), num("resolution"));
    if (cls == "strictly-competitive") return Game::strictly_competitive(mat("g"), fn("F"), fn("H"), num("resolution"));
    if (cls == "potential") return Game::potential(mat("U"), mat("V"), mat("Phi"));
    if (cls == "transfer") return Game::transfer(num("t_min"), num("t_max"), num("step"), fn("Fu"), fn("Fv"));
    if (cls == "repeated") return Game::repeated(mat("U"), mat("V"), num("resolution"));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where + ".class", "unknown game class '" + cls + "'");
}

Json game_to_json(const Game& g) {
  Json out;
  out["class"] = std::string(to_string(g.kind()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BimatrixPayload> || std::is_same_v<T, RepeatedPayload>) {
          out["U"] = matrix_to_json(p.U);
          out["V"] = matrix_to_json(p.V);
        } else if constexpr (std::is_same_v<T, ZeroSumPayload>) {
          out["g"] = matrix_to_json(p.g);
        } else if constexpr (std::is_same_v<T, CompetitivePayload>) {
          out["g"] = matrix_to_json(p.g);
          out["F"] = map_to_json(p.F);
          out["H"] = map_to_json(p.H);
        } else if constexpr (std::is_same_v<T, PotentialPayload>) {
          out["U"] = matrix_to_json(p.U);
          out["V"] = matrix_to_json(p.V);
          out["Phi"] = matrix_to_json(p.Phi);
        } else {
          out["t_min"] = rational_to_json(p.t_min);
          out["t_max"] = rational_to_json(p.t_max);
          out["step"] = rational_to_json(p.step);
          out["Fu"] = map_to_json(p.Fu);
          out["Fv"] = map_to_json(p.Fv);
        }
      },
      g.payload());
  if (auto r = g.resolution()) out["resolution"] = rational_to_json(*r);
  return out;
}

Instance instance_from_json(const Json& j) {
  const auto men = strings_from(field(j, "men", "instance"), "men");
  const auto women = strings_from(field(j, "women", "instance"), "women");
  std::vector<Rational> irp_m(men.size()), irp_w(women.size());
  if (j.contains("irp")) {
    const Json& irp = j["irp"];
    if (!irp.is_object()) fail("irp", "expected an object with 'men' and 'women'");
    if (irp.contains("men")) irp_m = irp_from(irp["men"], men, "irp.men");
    if (irp.contains("women")) irp_w = irp_from(irp["women"], women, "irp.women");
  }
  std::optional<Game> fallback;
  if (j.contains("default_game")) fallback = game_from_json(j["default_game"], "default_game");

  std::vector<std::vector<std::optional<Game>>> slots(men.size(), std::vector<std::optional<Game>>(women.size()));
  if (j.contains("games")) {
    const Json& gs = j["games"];
    if (!gs.is_array()) fail("games", "expected an array");
    for (std::size_t k = 0; k < gs.size(); ++k) {
      const std::string where = "games[" + std::to_string(k) + "]";
      const std::size_t i = find_name(men, string_from(field(gs[k], "man", where), where + ".man"), where + ".man");
      const std::size_t jj = find_name(women, string_from(field(gs[k], "woman", where), where + ".woman"), where + ".woman");
      if (slots[i][jj]) fail(where, "second game for " + men[i] + "/" + women[jj]);
      slots[i][jj] = game_from_json(gs[k], where);
    }
  }
  std::vector<std::vector<Game>> games(men.size());
  for (std::size_t i = 0; i < men.size(); ++i) {
    for (std::size_t jj = 0; jj < women.size(); ++jj) {
      if (slots[i][jj]) {
        games[i].push_back(*slots[i][jj]);
      } else if (fallback) {
        games[i].push_back(*fallback);
      } else {
        fail("games", "no game for " + men[i] + "/" + women[jj] + " and no default_game");
      }
    }
  }
  try {
    return Instance(men, women, irp_m, irp_w, std::move(games));
  } catch (const std::invalid_argument& e) {
    fail("instance", e.what());
  }
}

Json instance_to_json(const Instance& inst) {
  Json out;
  out["men"] = inst.men();
  out["women"] = inst.women();
  Json irp_m = Json::object(), irp_w = Json::object();
  for (std::size_t i = 0; i < inst.num_men(); ++i) irp_m[inst.man(i)] = rational_to_json(inst.irp_man(i));
  for (std::size_t j = 0; j < inst.num_women(); ++j) irp_w[inst.woman(j)] = rational_to_json(inst.irp_woman(j));
  out["irp"] = {{"men", irp_m}, {"women", irp_w}};
  Json games = Json::array();
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      Json g;
      g["man"] = inst.man(i);
      g["woman"] = inst.woman(j);
      const Json body = game_to_json(inst.game(i, j));
      for (const auto& [k, v] : body.items()) g[k] = v;
      games.push_back(std::move(g));
    }
  }
  out["games"] = std::move(games);
  return out;
}

MatchingProfile profile_from_json(const Instance& inst, const Json& j) {
  const Json& ms = field(j, "matches", "profile");
  if (!ms.is_array()) fail("matches", "expected an array");
  MatchingProfile pi = MatchingProfile::all_single(inst);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string where = "matches[" + std::to_string(k) + "]";
    const std::size_t i = find_name(inst.men(), string_from(field(ms[k], "man", where), where + ".man"), where + ".man");
    const std::size_t jj =
        find_name(inst.women(), string_from(field(ms[k], "woman", where), where + ".woman"), where + ".woman");
    const std::size_t id = index_from(field(ms[k], "contract", where), where + ".contract");
    const Game& g = inst.game(i, jj);
    if (id >= g.menu().size()) fail(where + ".contract", "no contract " + std::to_string(id) + " on this menu");
    const Contract& c = g.contract(id);
    if (ms[k].contains("u") && rational_from_json(ms[k]["u"], where + ".u") != c.u) {
      fail(where + ".u", "does not match contract " + std::to_string(id));
    }
    if (ms[k].contains("v") && rational_from_json(ms[k]["v"], where + ".v") != c.v) {
      fail(where + ".v", "does not match contract " + std::to_string(id));
    }
    if (pi.partner_of_man(i) || pi.partner_of_woman(jj)) fail(where, "agent matched twice");
    pi.match(i, jj, c);
  }
  return pi;
}

Json profile_to_json(const Instance& inst, const MatchingProfile& pi) {
  Json ms = Json::array();
  for (auto [i, j] : pi.couples()) {
    const Contract& c = *pi.contract_of_man(i);
    ms.push_back({{"man", inst.man(i)}, {"woman", inst.woman(j)}, {"contract", c.id}, {"u", rational_to_json(c.u)}, {"v", rational_to_json(c.v)}});
  }
  return {{"matches", ms}};
}

namespace {

void tree_node_from(const Json& j, const std::string& where, std::size_t players, std::vector<TreeNode>& nodes,
                    std::size_t self) {
  if (j.contains("payoff")) {
    const Json& p = j["payoff"];
    if (!p.is_array()) fail(where + ".payoff", "expected an array");
    for (std::size_t k = 0; k < p.size(); ++k) {
      nodes[self].payoff.push_back(rational_from_json(p[k], where + ".payoff[" + std::to_string(k) + "]"));
    }
    if (nodes[self].payoff.size() != players) fail(where + ".payoff", "needs one payoff per player");
    return;
  }
  const std::size_t who = index_from(field(j, "player", where), where + ".player");
  if (who >= players) fail(where + ".player", "unknown player");
  nodes[self].player = who;
  const Json& kids = field(j, "children", where);
  if (!kids.is_array() || kids.empty()) fail(where + ".children", "expected a non-empty array");
  for (std::size_t k = 0; k < kids.size(); ++k) {
    const std::size_t id = nodes.size();
    nodes.emplace_back();
    nodes[self].children.push_back(id);
    tree_node_from(kids[k], where + ".children[" + std::to_string(k) + "]", players, nodes, id);
  }
}

Json tree_node_to(const GameTree& t, std::size_t id) {
  const TreeNode& n = t.node(id);
  if (n.is_leaf()) {
    Json p = Json::array();
    for (const auto& x : n.payoff) p.push_back(rational_to_json(x));
    return {{"payoff", p}};
  }
  Json kids = Json::array();
  for (std::size_t c : n.children) kids.push_back(tree_node_to(t, c));
  return {{"player", *n.player}, {"children", kids}};
}

}  // namespace

GameTree tree_from_json(const Json& j) {
  const std::size_t players = index_from(field(j, "players", "tree"), "players");
  if (players == 0) fail("players", "need at least one player");
  std::vector<TreeNode> nodes(1);
  tree_node_from(field(j, "root", "tree"), "root", players, nodes, 0);
  try {
    return GameTree(players, std::move(nodes), 0);
  } catch (const std::invalid_argument& e) {
    fail("tree", e.what());
  }
}

Json tree_to_json(const GameTree& tree) { return {{"players", tree.players()}, {"root", tree_node_to(tree, tree.root())}}; }

OrdinalModel ordinal_from_json(const Json& j) {
  OrdinalModel m;
  m.men = strings_from(field(j, "men", "model"), "men");
  m.women = strings_from(field(j, "women", "model"), "women");
  const Json& prefs = field(j, "prefs", "model");
  for (const auto& name : m.men) m.prefs_men.push_back(strings_from(field(prefs, name, "prefs"), "prefs." + name));
  for (const auto& name : m.women) m.prefs_women.push_back(strings_from(field(prefs, name, "prefs"), "prefs." + name));
  return m;
}

ShapleyShubikModel shapley_shubik_from_json(const Json& j) {
  ShapleyShubikModel m;
  m.sellers = strings_from(field(j, "sellers", "model"), "sellers");
  m.buyers = strings_from(field(j, "buyers", "model"), "buyers");
  const Json& costs = field(j, "costs", "model");
  const Json& values = field(j, "values", "model");
  for (const auto& s : m.sellers) {
    m.costs.push_back(rational_from_json(field(costs, s, "costs"), "costs." + s));
    const Json& row = field(values, s, "values");
    m.values.emplace_back();
    for (const auto& b : m.buyers) {
      m.values.back().push_back(rational_from_json(field(row, b, "values." + s), "values." + s + "." + b));
    }
  }
  m.grid = grid_from(field(j, "grid", "model"), "grid");
  return m;
}

GaleDemangeModel gale_demange_from_json(const Json& j) {
  GaleDemangeModel m;
  m.men = strings_from(field(j, "men", "model"), "men");
  m.women = strings_from(field(j, "women", "model"), "women");
  m.grid = grid_from(field(j, "grid", "model"), "grid");
  std::vector<std::vector<std::optional<PiecewiseLinear>>> F(m.men.size(), std::vector<std::optional<PiecewiseLinear>>(m.women.size()));
  auto H = F;
  const Json& maps = field(j, "maps", "model");
  if (!maps.is_array()) fail("maps", "expected an array");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const std::string where = "maps[" + std::to_string(k) + "]";
    const std::size_t i = find_name(m.men, string_from(field(maps[k], "man", where), where + ".man"), where + ".man");
    const std::size_t jj =
        find_name(m.women, string_from(field(maps[k], "woman", where), where + ".woman"), where + ".woman");
    if (F[i][jj]) fail(where, "second entry for " + m.men[i] + "/" + m.women[jj]);
    F[i][jj] = map_from(field(maps[k], "F", where), where + ".F");
    H[i][jj] = map_from(field(maps[k], "H", where), where + ".H");
  }
  for (std::size_t i = 0; i < m.men.size(); ++i) {
    m.F.emplace_back();
    m.H.emplace_back();
    for (std::size_t jj = 0; jj < m.women.size(); ++jj) {
      if (!F[i][jj]) fail("maps", "no maps for " + m.men[i] + "/" + m.women[jj]);
      m.F[i].push_back(*F[i][jj]);
      m.H[i].push_back(*H[i][jj]);
    }
  }
  return m;
}

ContractsModel contracts_from_json(const Json& j) {
  ContractsModel m;
  m.men = strings_from(field(j, "men", "model"), "men");
  m.women = strings_from(field(j, "women", "model"), "women");
  const Json& cs = field(j, "contracts", "model");
  if (!cs.is_array()) fail("contracts", "expected an array");
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::string where = "contracts[" + std::to_string(k) + "]";
    m.contracts.push_back({string_from(field(cs[k], "name", where), where + ".name"),
                           string_from(field(cs[k], "man", where), where + ".man"),
                           string_from(field(cs[k], "woman", where), where + ".woman")});
  }
  const Json& prefs = field(j, "prefs", "model");
  auto list_of = [&](const std::string& name) {
    const std::string where = "prefs." + name;
    std::vector<std::optional<std::string>> out;
    const Json& l = field(prefs, name, "prefs");
    if (!l.is_array()) fail(where, "expected an array of contract names or null");
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (l[k].is_null()) {
        out.emplace_back();
      } else {
        out.emplace_back(string_from(l[k], where + "[" + std::to_string(k) + "]"));
      }
    }
    return out;
  };
  for (const auto& name : m.men) m.prefs_men.push_back(list_of(name));
  for (const auto& name : m.women) m.prefs_women.push_back(list_of(name));
  return m;
}

}  // namespace smg
