#pragma once

#include <optional>

#include "smg/instance.hpp"

namespace smg {

/// Whenever an agent's payoffs in the two profiles are within eps of each
/// other, the agent has the same partner (or is single) in both. eps = 0
/// means exact equality.
bool check_condition_star2(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b,
                           const Rational& eps = 0);

/// Every agent of `side` takes the partner and contract of the profile where
/// it earns more; ties keep a's contract. Throws std::invalid_argument if a
/// or b is not eps-externally stable or the pair fails the condition above,
/// std::logic_error if the result is not a matching.
MatchingProfile join(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b, Side side,
                     const Rational& eps = 0);

/// Men take the profile where they earn less (ties keep a). Absent when two
/// men pick the same woman. No stability claim: callers check.
std::optional<MatchingProfile> men_meet(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b);

struct DualityResult {
  MatchingProfile women_join;
  std::optional<MatchingProfile> men_meet;
  /// men_meet exists and equals women_join contract for contract.
  bool agree = false;
  /// women_join is eps-externally stable.
  bool stable = false;
};

/// For instances where every game is zero-sum, strictly competitive or a
/// transfer game: build the women-join and the men-meet side by side.
/// Throws std::invalid_argument for any other game class, and on the same
/// preconditions as join.
DualityResult meet_zero_sum_duality(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b,
                                    const Rational& eps = 0);

}  // namespace smg
