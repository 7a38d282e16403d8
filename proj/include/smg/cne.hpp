#pragma once

#include <optional>
#include <string_view>

#include "smg/geometry.hpp"
#include "smg/instance.hpp"

namespace smg {

/// Best payoffs the two partners can secure outside their couple; a missing
/// value is minus infinity.
struct OutsideOptions {
  LowerBound u0;
  LowerBound v0;
};

/// u0 = max of the man's single payoff and U over contracts with other women
/// b whose V exceeds v_b + eps; symmetrically for v0.
OutsideOptions outside_options(const Instance& inst, const MatchingProfile& pi, std::size_t i, std::size_t j,
                               const Rational& eps);

/// Same candidate sets, but each candidate payoff is lowered by eps (the single
/// payoff is not). A contract is a CNE for these options iff no profitable
/// deviation of the couple survives eps-external stability. Equal to
/// outside_options when eps = 0.
OutsideOptions effective_outside_options(const Instance& inst, const MatchingProfile& pi, std::size_t i,
                                         std::size_t j, const Rational& eps);

bool is_feasible(const Contract& c, const OutsideOptions& oo);

/// Feasible, and every profitable deviation pushes the partner strictly below
/// his or her outside option.
bool is_cne(const Game& game, const Contract& c, const OutsideOptions& oo);

enum class CnePolicy { Any, PreferNash, MaxPotential, RepeatedOracle, ZeroSumMedian };
std::string_view to_string(CnePolicy p);
CnePolicy default_policy(GameClass c);
bool policy_applies(CnePolicy p, GameClass c);

enum class CneFailure { Infeasible, NotFeasibleGame };
std::string_view to_string(CneFailure f);

struct CneResult {
  std::optional<Contract> contract;
  std::optional<CneFailure> failure;
};

/// Throws std::invalid_argument if the policy does not fit the game class.
CneResult solve_cne(const Game& game, const OutsideOptions& oo, CnePolicy policy);

/// Level-space target median(lower, upper, w) for the level classes; absent
/// if the level constraints are contradictory.
std::optional<Rational> median_level(const Game& game, const OutsideOptions& oo);

/// Exact constrained-equilibrium payoff of the infinitely repeated game with
/// the given stage matrices; absent iff no hull point meets both options.
std::optional<Point> repeated_cne_payoff(const Matrix& U, const Matrix& V, const OutsideOptions& oo);

}  // namespace smg
