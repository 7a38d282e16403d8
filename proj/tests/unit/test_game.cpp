#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "smg/game.hpp"

using namespace smg;

namespace {
Matrix M(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (auto x : r) m.back().push_back(Rational(x));
  }
  return m;
}

const Contract& at_level(const Game& g, const Rational& level) { return g.contract(*g.at_level(level)); }

void check_menu_consistent(const Game& g) {
  const auto& menu = g.menu();
  REQUIRE_FALSE(menu.empty());
  for (std::size_t k = 0; k < menu.size(); ++k) {
    CHECK(menu[k].id == k);
    const auto [u, v] = g.payoff(menu[k]);
    CHECK(u == menu[k].u);
    CHECK(v == menu[k].v);
    const auto [u2, v2] = g.evaluate(menu[k].strategy);
    CHECK(u2 == menu[k].u);
    CHECK(v2 == menu[k].v);
  }
}
}  // namespace

TEST_CASE("bimatrix payoffs and menu") {
  const Game g = Game::bimatrix(M({{2, 0}, {3, 1}}), M({{1, 0}, {0, 2}}));
  CHECK(g.menu().size() == 4);
  CHECK(payoff(g, g.contract(0)) == std::pair{Rational(2), Rational(1)});
  check_menu_consistent(g);
  const Game other = Game::bimatrix(M({{5}}), M({{5}}));
  CHECK_THROWS_AS(g.payoff(other.contract(0)), std::invalid_argument);
  CHECK_THROWS_AS(g.contract(4), std::out_of_range);
  CHECK_THROWS_AS(Game::bimatrix(M({{1, 2}}), M({{1}})), std::invalid_argument);
}

TEST_CASE("zero-sum menu is a level grid with v = -u") {
  const Game g = Game::zero_sum(M({{1, -1}, {-1, 1}}), Rational(1, 2));
  REQUIRE(g.menu().size() == 5);
  std::vector<Rational> levels;
  for (const auto& c : g.menu()) {
    levels.push_back(c.u);
    CHECK(c.v == -c.u);
  }
  CHECK(levels == std::vector<Rational>{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)});
  CHECK(at_level(g, Rational(1, 2)).v == Rational(-1, 2));
  CHECK(g.pivot() == Rational(0));
  check_menu_consistent(g);
  CHECK_THROWS_AS(Game::zero_sum(M({{1}}), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(Game::repeated(M({{1}}), M({{1}}), Rational(-1)), std::invalid_argument);
}

TEST_CASE("transfer menu") {
  const Game g = Game::transfer(Rational(0), Rational(6), Rational(1), PiecewiseLinear::affine(1, -2),
                                PiecewiseLinear::affine(1, 6));
  CHECK(g.menu().size() == 7);
  const Contract& c = at_level(g, Rational(4));
  CHECK(c.u == Rational(2));
  CHECK(c.v == Rational(2));
  check_menu_consistent(g);
}

TEST_CASE("strictly competitive menus move u and v in opposite directions") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Game g = testing::random_game_of_class(rng, GameClass::StrictlyCompetitive);
    check_menu_consistent(g);
    const auto& menu = g.menu();
    for (const auto& a : menu) {
      for (const auto& b : menu) {
        CHECK((a.u < b.u) == (a.v > b.v));
      }
    }
  }
}

TEST_CASE("continuous menus respect the resolution in u") {
  testing::Rng rng(29);
  for (GameClass cls : {GameClass::ZeroSum, GameClass::StrictlyCompetitive, GameClass::Transfer, GameClass::RepeatedStage}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Game g = testing::random_game_of_class(rng, cls);
      const Rational res = *g.resolution();
      check_menu_consistent(g);
      std::vector<Rational> us;
      for (const auto& c : g.menu()) us.push_back(c.u);
      std::sort(us.begin(), us.end());
      for (std::size_t k = 1; k < us.size(); ++k) CHECK(us[k] - us[k - 1] <= res);
    }
  }
}

TEST_CASE("menus are deterministic") {
  testing::Rng a(31), b(31);
  for (GameClass cls : {GameClass::FiniteBimatrix, GameClass::ZeroSum, GameClass::Potential, GameClass::RepeatedStage}) {
    const Game g1 = testing::random_game_of_class(a, cls);
    const Game g2 = testing::random_game_of_class(b, cls);
    CHECK(g1.menu() == g2.menu());
    CHECK(contract_menu(g1) == g1.menu());
  }
}

TEST_CASE("punishment levels") {
  CHECK(punishment_levels(M({{3, 0}, {4, 1}}), M({{3, 4}, {0, 1}})) == std::pair{Rational(1), Rational(1)});
  CHECK(punishment_levels(M({{1, -1}, {-1, 1}}), M({{-1, 1}, {1, -1}})) == std::pair{Rational(0), Rational(0)});
  // common interest: maximin of [[2,0],[0,1]] is 2/3 for both
  const auto [a, b] = punishment_levels(M({{2, 0}, {0, 1}}), M({{2, 0}, {0, 1}}));
  CHECK(a == Rational(2, 3));
  CHECK(b == Rational(2, 3));
}

TEST_CASE("feasible payoff hull") {
  const auto h = feasible_payoff_hull(M({{3, 0}, {4, 1}}), M({{3, 4}, {0, 1}}));
  std::set<std::pair<Rational, Rational>> got;
  for (const auto& p : h.vertices()) got.insert({p.u, p.v});
  CHECK(got == std::set<std::pair<Rational, Rational>>{{Rational(0), Rational(4)}, {Rational(3), Rational(3)},
                                                       {Rational(4), Rational(0)}, {Rational(1), Rational(1)}});
  CHECK(feasible_payoff_hull(M({{3}}), M({{3}})).vertices().size() == 1);
  CHECK(feasible_payoff_hull(M({{1, -1}, {-1, 1}}), M({{-1, 1}, {1, -1}})).vertices().size() == 2);

  testing::Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix U = testing::random_matrix(rng, 3, 2, -5, 5, 2), V = testing::random_matrix(rng, 3, 2, -5, 5, 2);
    const auto hull = feasible_payoff_hull(U, V);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 2; ++c) CHECK(hull.contains({U[r][c], V[r][c]}));
    }
  }
}

TEST_CASE("potential validation") {
  CHECK(validate_potential(M({{2, 0}, {0, 1}}), M({{2, 0}, {0, 1}}), M({{2, 0}, {0, 1}})));
  CHECK_FALSE(validate_potential(M({{2, 0}, {3, 1}}), M({{1, 0}, {0, 2}}), M({{0, 0}, {0, 0}})));
  CHECK(validate_potential(M({{3, 0}, {4, 1}}), M({{3, 4}, {0, 1}}), M({{0, 2}, {2, 3}})));
  CHECK_THROWS_AS(validate_potential(M({{1}}), M({{1}}), M({{1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(Game::potential(M({{2, 0}, {3, 1}}), M({{1, 0}, {0, 2}}), M({{0, 0}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("repeated game regions") {
  const Game g = Game::repeated(M({{3, 0}, {4, 1}}), M({{3, 4}, {0, 1}}), Rational(1));
  CHECK(g.alpha() == Rational(1));
  CHECK(g.beta() == Rational(1));
  for (const auto& c : g.menu()) CHECK(g.hull().contains({c.u, c.v}));
  CHECK(g.equilibrium_region().contains({Rational(3), Rational(3)}));
  CHECK_FALSE(g.equilibrium_region().contains({Rational(4), Rational(0)}));
}

TEST_CASE("nash detection on pure cells") {
  const Game pd = Game::bimatrix(M({{3, 0}, {4, 1}}), M({{3, 4}, {0, 1}}));
  int nash = 0;
  for (const auto& c : pd.menu()) nash += pd.is_nash(c);
  CHECK(nash == 1);
  CHECK(pd.is_nash(pd.contract(3)));
}
