#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "smg/adapters.hpp"
#include "smg/propose_dispose.hpp"

using namespace smg;

namespace {

Instance classic() {
  return from_ordinal({{"m1", "m2"},
                       {"w1", "w2"},
                       {{"w1", "w2"}, {"w2", "w1"}},
                       {{"m2", "m1"}, {"m1", "m2"}}});
}

Matrix M(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (auto x : r) m.back().push_back(Rational(x));
  }
  return m;
}

}  // namespace

TEST_CASE("ordinal markets reproduce deferred acceptance") {
  const Instance inst = classic();
  const auto men = run_propose_dispose(inst, 1, Side::Men).profile;
  CHECK(men.partner_of_man(0) == 0u);
  CHECK(men.partner_of_man(1) == 1u);
  const auto women = run_propose_dispose(inst, 1, Side::Women).profile;
  CHECK(women.partner_of_man(0) == 1u);
  CHECK(women.partner_of_man(1) == 0u);

  testing::Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const OrdinalModel m = testing::random_ordinal(rng, rng.integer(1, 5), rng.integer(1, 5));
    const Instance o = from_ordinal(m);
    const auto pi = run_propose_dispose(o, 1, Side::Men).profile;
    const auto gs = testing::gale_shapley(m);
    for (std::size_t i = 0; i < m.men.size(); ++i) {
      const auto p = pi.partner_of_man(i);
      CHECK((p ? static_cast<int>(*p) : -1) == gs[i]);
    }
  }
}

TEST_CASE("subproblems") {
  // man 0 with two women; w1 is already at payoff 2
  const Game a = Game::bimatrix(M({{5, 3}}), M({{1, 4}}));
  const Game b = Game::bimatrix(M({{2}}), M({{9}}));
  const Instance inst({"m"}, {"w1", "w2"}, {1}, {0, 0}, {{a, b}});
  const std::vector<Rational> v{Rational(2), Rational(0)};
  const auto sol = solve_Pi(inst, 0, v, 1);
  REQUIRE(sol.target);
  CHECK(*sol.target == 0u);
  CHECK(sol.contract->id == 1u);  // (3, 4): the 5-contract gives w1 only 1
  CHECK(sol.objective == Rational(3));
  CHECK(solve_Pi(inst, 0, v, 1, Side::Men, 0u).objective == Rational(2));
  CHECK(solve_Pi(inst, 0, {Rational(9), Rational(9)}, 1).target == std::nullopt);
  CHECK(solve_Pi(inst, 0, {Rational(9), Rational(9)}, 1).objective == Rational(1));

  CHECK(solve_Pmax(inst, 0, 0, 3) == LowerBound(Rational(4)));
  CHECK(solve_Pmax(inst, 0, 0, 5) == LowerBound(Rational(1)));
  CHECK_FALSE(solve_Pmax(inst, 0, 0, 6));
  CHECK(solve_Pnew(inst, 0, 0, std::nullopt).id == 0u);
  CHECK(solve_Pnew(inst, 0, 0, LowerBound(Rational(2))).id == 1u);
  CHECK_THROWS_AS(solve_Pnew(inst, 0, 0, LowerBound(Rational(5))), std::logic_error);
}

TEST_CASE("competition between two men") {
  // both men want w; m2 can offer her more
  const Game g1 = Game::bimatrix(M({{4, 2}}), M({{1, 2}}));
  const Game g2 = Game::bimatrix(M({{3, 1}}), M({{2, 5}}));
  const Instance inst({"m1", "m2"}, {"w"}, {0, 0}, {0}, {{g1}, {g2}});
  const auto res = run_propose_dispose(inst, 1, Side::Men);
  CHECK(res.profile.partner_of_woman(0) == 1u);
  CHECK(is_externally_stable(inst, res.profile, 1).holds);
  bool competed = false;
  for (const auto& e : res.state.trace) competed |= e.kind == EventKind::Compete;
  CHECK(competed);
  CHECK(to_line(inst, Side::Men, res.state.trace.front()).find("proposer=m1") != std::string::npos);
}

TEST_CASE("rejects non-positive eps") {
  CHECK_THROWS_AS(run_propose_dispose(classic(), 0), std::invalid_argument);
  CHECK_THROWS_AS(run_propose_dispose(classic(), -1), std::invalid_argument);
}

TEST_CASE("random markets: stability, progress and the iteration bound") {
  testing::Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    const Instance inst = testing::random_bimatrix_instance(rng, rng.integer(1, 4), rng.integer(1, 4), -6, 6, 2, 3, -3, 2);
    const Rational eps = t % 3 == 0 ? Rational(1, 3) : Rational(1);
    const Side side = t % 2 ? Side::Men : Side::Women;
    const auto res = run_propose_dispose(inst, eps, side);
    CHECK(testing::naive_externally_stable(inst, res.profile, eps));
    CHECK(res.state.iterations <= iteration_bound(inst, eps, side));
    for (const auto& e : res.state.trace) {
      if (e.receiver_before && e.receiver_after) CHECK(*e.receiver_after >= *e.receiver_before + eps);
    }
  }
}

TEST_CASE("shrinking eps settles on an exact verdict") {
  testing::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = testing::random_bimatrix_instance(rng, 3, 3, -4, 4, 1, 2, -2, 0);
    const auto lim = propose_dispose_limit(inst, Side::Men, 1, 12);
    CHECK(lim.runs >= 1u);
    CHECK(lim.exact.notion == Notion::External0);
    CHECK(lim.exact.holds == testing::naive_externally_stable(inst, lim.profile, 0));
    if (lim.settled) CHECK(lim.runs >= 2u);
  }
}
