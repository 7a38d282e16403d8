#include <algorithm>
#include <functional>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "smg/adapters.hpp"
#include "smg/oracle.hpp"
#include "smg/propose_dispose.hpp"

using namespace smg;

TEST_CASE("ordinal encoding") {
  const OrdinalModel m{{"a", "b"}, {"x", "y", "z"}, {{"y", "x", "z"}, {"x", "y", "z"}}, {{"b", "a"}, {"a", "b"}, {"a", "b"}}};
  const Instance inst = from_ordinal(m);
  CHECK(inst.game(0, 1).contract(0).u == Rational(3));
  CHECK(inst.game(0, 2).contract(0).u == Rational(1));
  CHECK(inst.game(0, 0).contract(0).v == Rational(1));
  CHECK(inst.game(1, 0).contract(0).v == Rational(2));
  CHECK(inst.irp_man(0) == Rational(0));

  OrdinalModel bad = m;
  bad.prefs_men[0] = {"y", "x"};
  CHECK_THROWS_AS(from_ordinal(bad), std::invalid_argument);
  bad = m;
  bad.prefs_men[0] = {"y", "y", "z"};
  CHECK_THROWS_AS(from_ordinal(bad), std::invalid_argument);
}

TEST_CASE("assignment game") {
  const ShapleyShubikModel m{{"s"}, {"b"}, {Rational(1)}, {{Rational(5)}}, {Rational(0), Rational(6), Rational(1)}};
  const Instance inst = from_shapley_shubik(m);
  const Game& g = inst.game(0, 0);
  CHECK(g.kind() == GameClass::Transfer);
  CHECK(g.menu().size() == 7u);
  for (const auto& c : g.menu()) CHECK(c.u + c.v == Rational(4));
  const auto pi = run_propose_dispose(inst, 1).profile;
  REQUIRE(pi.partner_of_man(0) == 0u);
  CHECK(pi.u(inst, 0) >= 0);
  CHECK(pi.v(inst, 0) >= 0);

  ShapleyShubikModel bad = m;
  bad.grid.step = 0;
  CHECK_THROWS_AS(from_shapley_shubik(bad), std::invalid_argument);
  bad = m;
  bad.values = {};
  CHECK_THROWS_AS(from_shapley_shubik(bad), std::invalid_argument);
}

TEST_CASE("assignment game with competition for one buyer") {
  // two sellers, one buyer valuing seller 2's good more
  const ShapleyShubikModel m{{"s1", "s2"},
                             {"b"},
                             {Rational(0), Rational(0)},
                             {{Rational(4)}, {Rational(6)}},
                             {Rational(0), Rational(8), Rational(1)}};
  const Instance inst = from_shapley_shubik(m);
  for (const Side side : {Side::Men, Side::Women}) {
    const auto pi = run_propose_dispose(inst, 1, side).profile;
    CHECK(pi.partner_of_woman(0) == 1u);
    CHECK(is_externally_stable(inst, pi, 1).holds);
  }
}

TEST_CASE("contract scores") {
  const ContractsModel m{{"m"},
                         {"w"},
                         {{"x", "m", "w"}, {"y", "m", "w"}, {"z", "m", "w"}},
                         {{"y", std::nullopt, "x"}},
                         {{"x", "y", "z", std::nullopt}}};
  const auto sm = contract_scores(m, Side::Men, 0);
  CHECK(sm[1] == Rational(1));
  CHECK(sm[0] == Rational(-1));
  CHECK(sm[2] == Rational(-2));  // unlisted: after the empty contract
  const auto sw = contract_scores(m, Side::Women, 0);
  CHECK(sw[0] == Rational(3));
  CHECK(sw[2] == Rational(1));

  const Instance inst = from_hatfield_milgrom(m);
  const Game& g = inst.game(0, 0);
  CHECK(g.rows() == 3u);
  CHECK(g.contract(4).u == Rational(1));  // cell (1, 1) is contract y
  CHECK(g.contract(1).u == Rational(-5));
  // only y is acceptable to both
  const auto all = enumerate_stable(inst, 0, OracleNotion::External);
  REQUIRE(all.size() == 1u);
  CHECK(all[0].contract_of_man(0)->id == 4u);

  ContractsModel bad = m;
  bad.prefs_men[0].push_back("q");
  CHECK_THROWS_AS(from_hatfield_milgrom(bad), std::invalid_argument);
}

namespace {

// At most one contract per pair, so renegotiating inside a couple is not an
// issue and the two stability notions must coincide.
ContractsModel random_contracts(testing::Rng& rng) {
  ContractsModel m;
  m.men = testing::names("m", rng.integer(1, 3));
  m.women = testing::names("w", rng.integer(1, 3));
  for (const auto& a : m.men) {
    for (const auto& b : m.women) {
      if (rng.chance(0.75)) m.contracts.push_back({a + b, a, b});
    }
  }
  auto list_for = [&](bool man, const std::string& who) {
    std::vector<std::optional<std::string>> l;
    for (const auto& c : m.contracts) {
      if ((man ? c.man : c.woman) == who) l.emplace_back(c.name);
    }
    std::shuffle(l.begin(), l.end(), rng.engine());
    l.insert(l.begin() + rng.integer(0, static_cast<long long>(l.size())), std::nullopt);
    if (!l.empty() && rng.chance(0.3)) l.pop_back();
    return l;
  };
  for (const auto& a : m.men) m.prefs_men.push_back(list_for(true, a));
  for (const auto& b : m.women) m.prefs_women.push_back(list_for(false, b));
  return m;
}

}  // namespace

TEST_CASE("contract markets: stable profiles are stable allocations") {
  testing::Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    const ContractsModel m = random_contracts(rng);
    const Instance inst = from_hatfield_milgrom(m);
    const auto stable = enumerate_stable(inst, 0, OracleNotion::External);

    // every allocation, by brute force
    std::size_t hm_count = 0;
    std::map<std::size_t, std::size_t> alloc;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == m.contracts.size()) {
        hm_count += testing::hm_stable(m, alloc) ? 1 : 0;
        return;
      }
      rec(k + 1);
      const std::size_t man = *inst.man_index(m.contracts[k].man);
      const bool man_free = !alloc.count(man);
      bool woman_free = true;
      for (const auto& [i, c] : alloc) woman_free &= m.contracts[c].woman != m.contracts[k].woman;
      if (man_free && woman_free) {
        alloc[man] = k;
        rec(k + 1);
        alloc.erase(man);
      }
    };
    rec(0);
    CHECK(stable.size() == hm_count);

    for (const auto& pi : stable) {
      std::map<std::size_t, std::size_t> a;
      for (auto [i, j] : pi.couples()) {
        const auto cell = inst.game(i, j).pure_cell(*pi.contract_of_man(i));
        REQUIRE(cell);
        CHECK(cell->row == cell->col);
        a[i] = cell->row;
      }
      CHECK(testing::hm_stable(m, a));
    }
  }
}
