#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "smg/cne.hpp"
#include "smg/instance.hpp"

namespace smg {

/// Number of matching profiles (partial matchings times contract choices).
Rational count_profiles(const Instance& inst);

/// Stream every matching profile in a fixed order: man 0 first, single
/// before matched, women ascending, contracts by id. The callback returns
/// false to stop early.
void for_each_profile(const Instance& inst, const std::function<bool(const MatchingProfile&)>& visit);

enum class OracleNotion { External, Internal, Nash, Unilateral, Weak };
std::string_view to_string(OracleNotion n);

/// True iff pi satisfies the notion. Internal means externally stable at eps
/// and internally stable; Nash, Unilateral and Weak ignore eps.
bool satisfies(const Instance& inst, const MatchingProfile& pi, const Rational& eps, OracleNotion notion);

constexpr std::uint64_t kDefaultProfileCap = 10'000'000;

/// All profiles satisfying the notion, in for_each_profile order. Throws
/// std::length_error (with the count) when the profile count exceeds cap.
std::vector<MatchingProfile> enumerate_stable(const Instance& inst, const Rational& eps, OracleNotion notion,
                                              std::uint64_t cap = kDefaultProfileCap);

/// Menu contracts not strictly beaten in both coordinates by another.
std::vector<Contract> pareto_frontier(const Game& game);

/// Every menu contract that is a constrained Nash equilibrium.
std::vector<Contract> brute_force_cne(const Game& game, const OutsideOptions& oo);

}  // namespace smg
