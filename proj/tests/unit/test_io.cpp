#include <functional>

#include "doctest.h"
#include "generators.hpp"
#include "smg/io.hpp"

using namespace smg;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool same_menus(const Instance& a, const Instance& b) {
  for (std::size_t i = 0; i < a.num_men(); ++i) {
    for (std::size_t j = 0; j < a.num_women(); ++j) {
      const auto& x = a.game(i, j).menu();
      const auto& y = b.game(i, j).menu();
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].u != y[k].u || x[k].v != y[k].v) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json("3/6"), "x") == Rational(1, 2));
  CHECK(rational_from_json(Json(-4), "x") == Rational(-4));
  CHECK(rational_from_json(Json("-7"), "x") == Rational(-7));
  CHECK(rational_to_json(Rational(3)) == Json(3));
  CHECK(rational_to_json(Rational(-1, 3)) == Json("-1/3"));
  CHECK(error_of([] { rational_from_json(Json(0.5), "a.b"); }).rfind("a.b:", 0) == 0);
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("one"), "x"), ParseError);
}

TEST_CASE("instance round trip for every class") {
  testing::Rng rng(10);
  const GameClass classes[] = {GameClass::FiniteBimatrix, GameClass::ZeroSum, GameClass::StrictlyCompetitive,
                               GameClass::Potential, GameClass::Transfer, GameClass::RepeatedStage};
  for (const auto cls : classes) {
    const Instance inst = testing::random_class_instance(rng, cls, 2, 2);
    const Json j = instance_to_json(inst);
    const Instance back = instance_from_json(parse_json_text(dump(j)));
    CHECK(back.men() == inst.men());
    CHECK(back.irp_woman(1) == inst.irp_woman(1));
    CHECK(back.game(1, 0).kind() == cls);
    CHECK(same_menus(inst, back));
    CHECK(instance_to_json(back) == j);
  }
}

TEST_CASE("instance defaults and errors") {
  const Json j = parse_json_text(R"({
    "men": ["m1", "m2"], "women": ["w"],
    "irp": {"men": {"m2": "1/2"}},
    "default_game": {"class": "bimatrix", "U": [[1]], "V": [[2]]},
    "games": [{"man": "m1", "woman": "w", "class": "zero-sum", "g": [[0, 2]], "resolution": 1}]
  })");
  const Instance inst = instance_from_json(j);
  CHECK(inst.irp_man(0) == Rational(0));
  CHECK(inst.irp_man(1) == Rational(1, 2));
  CHECK(inst.game(0, 0).kind() == GameClass::ZeroSum);
  CHECK(inst.game(1, 0).contract(0).v == Rational(2));

  Json k = j;
  k["games"][0]["man"] = "nobody";
  CHECK(error_of([&] { instance_from_json(k); }).find("games[0].man") != std::string::npos);
  k = j;
  k.erase("default_game");
  CHECK(error_of([&] { instance_from_json(k); }).find("no game for m2/w") != std::string::npos);
  k = j;
  k["games"][0]["class"] = "chess";
  CHECK(error_of([&] { instance_from_json(k); }).find("unknown game class") != std::string::npos);
  CHECK(error_of([] { parse_json_text("{\"men\": [}"); }).find("line") != std::string::npos);

  // a piecewise map written as breakpoints
  const Json sc = parse_json_text(R"({"class": "strictly-competitive", "g": [[0, 1]], "resolution": "1/2",
      "F": [[0, 0], [1, 2]], "H": {"slope": 1, "intercept": 0}})");
  const Game g = game_from_json(sc);
  CHECK(g.contract(*g.at_level(1)).u == Rational(2));
}

TEST_CASE("profiles") {
  const Instance inst = instance_from_json(parse_json_text(R"({
    "men": ["m"], "women": ["w"],
    "default_game": {"class": "bimatrix", "U": [[1, 2]], "V": [[3, 4]]}})"));
  const auto pi = profile_from_json(inst, parse_json_text(R"({"matches": [{"man": "m", "woman": "w", "contract": 1}]})"));
  CHECK(pi.u(inst, 0) == Rational(2));
  const Json out = profile_to_json(inst, pi);
  CHECK(out["matches"][0]["v"] == Json(4));
  CHECK(profile_from_json(inst, out) == pi);
  CHECK_THROWS_AS(profile_from_json(inst, parse_json_text(R"({"matches": [{"man": "m", "woman": "w", "contract": 1, "u": 1}]})")),
                  ParseError);
  CHECK_THROWS_AS(profile_from_json(inst, parse_json_text(R"({"matches": [{"man": "m", "woman": "w", "contract": 5}]})")),
                  ParseError);
}

TEST_CASE("trees") {
  const Json j = parse_json_text(R"({"players": 2, "root": {"player": 0, "children": [
      {"payoff": [1, 1]}, {"player": 1, "children": [{"payoff": ["1/2", 2]}, {"payoff": [0, 3]}]}]}})");
  const GameTree t = tree_from_json(j);
  CHECK(t.size() == 5u);
  CHECK(tree_to_json(t) == j);
  Json bad = j;
  bad["root"]["children"][0]["payoff"] = Json::array({1});
  CHECK_THROWS_AS(tree_from_json(bad), ParseError);
}

TEST_CASE("model readers") {
  const auto o = ordinal_from_json(parse_json_text(
      R"({"men": ["a"], "women": ["x", "y"], "prefs": {"a": ["y", "x"], "x": ["a"], "y": ["a"]}})"));
  CHECK(o.prefs_men[0] == std::vector<std::string>{"y", "x"});
  const auto ss = shapley_shubik_from_json(parse_json_text(
      R"({"sellers": ["s"], "buyers": ["b"], "costs": {"s": 1}, "values": {"s": {"b": 5}},
          "grid": {"min": 0, "max": 6, "step": "1/2"}})"));
  CHECK(ss.values[0][0] == Rational(5));
  CHECK(ss.grid.step == Rational(1, 2));
  const auto gd = gale_demange_from_json(parse_json_text(
      R"({"men": ["m"], "women": ["w"], "grid": {"min": 0, "max": 2, "step": 1},
          "maps": [{"man": "m", "woman": "w", "F": {"slope": 2, "intercept": 0}, "H": [[-5, -5], [5, 5]]}]})"));
  CHECK(gd.F[0][0](Rational(1)) == Rational(2));
  const auto c = contracts_from_json(parse_json_text(
      R"({"men": ["m"], "women": ["w"], "contracts": [{"name": "x", "man": "m", "woman": "w"}],
          "prefs": {"m": ["x", null], "w": [null, "x"]}})"));
  CHECK(c.prefs_women[0][0] == std::nullopt);
  CHECK(c.prefs_men[0][0] == std::optional<std::string>("x"));
}
