#include "doctest.h"
#include "smg/instance.hpp"

using namespace smg;

namespace {
Game one(long long u, long long v) { return Game::bimatrix({{Rational(u)}}, {{Rational(v)}}); }
}  // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(Instance({"m"}, {"w"}, {0}, {0}, {{one(1, 1)}}));
  CHECK_THROWS_AS(Instance({"a", "a"}, {"w"}, {0, 0}, {0}, {{one(1, 1)}, {one(1, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance({"m"}, {"w"}, {0}, {0}, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance({"m"}, {"w"}, {}, {0}, {{one(1, 1)}}), std::invalid_argument);
  const Instance inst({"m1", "m2"}, {"w1"}, {0, 0}, {0}, {{one(1, 1)}, {one(2, 2)}});
  CHECK(inst.man_index("m2") == 1u);
  CHECK_FALSE(inst.woman_index("nobody"));
  CHECK(inst.max_menu_size() == 1u);
}

TEST_CASE("profiles keep the matching consistent") {
  const Instance inst({"m1", "m2"}, {"w1", "w2"}, {-1, -2}, {-3, -4},
                      {{one(1, 1), one(2, 2)}, {one(3, 3), one(4, 4)}});
  MatchingProfile pi = MatchingProfile::all_single(inst);
  CHECK(pi.u(inst, 1) == Rational(-2));
  CHECK(pi.v(inst, 0) == Rational(-3));
  pi.match(1, 0, inst.game(1, 0).contract(0));
  CHECK(pi.partner_of_woman(0) == 1u);
  CHECK(pi.u(inst, 1) == Rational(3));
  CHECK_THROWS_AS(pi.match(0, 0, inst.game(0, 0).contract(0)), std::logic_error);
  CHECK(pi.couples() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});
  validate_profile(inst, pi);
  pi.unmatch_man(1);
  CHECK(pi == MatchingProfile::all_single(inst));

  MatchingProfile bad = MatchingProfile::all_single(inst);
  bad.match(0, 0, inst.game(1, 1).contract(0));  // contract from another couple's menu
  CHECK_THROWS_AS(validate_profile(inst, bad), std::invalid_argument);
}
