#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "smg/instance.hpp"

namespace smg {

enum class Notion { IR, ExternalEps, External0, Unilateral, Weak, Nash, Internal };
std::string_view to_string(Notion n);

/// A pair that blocks a profile. A missing man or woman stands for the empty
/// player, i.e. an agent who would rather be single; then there is no contract.
struct BlockingPair {
  std::optional<std::size_t> man;
  std::optional<std::size_t> woman;
  std::optional<Contract> contract;
  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

/// A unilateral deviation of one partner of a couple.
struct DeviationWitness {
  std::size_t man = 0;
  std::size_t woman = 0;
  Role deviator = Role::Row;
  Contract from;
  Contract to;
  friend bool operator==(const DeviationWitness&, const DeviationWitness&) = default;
};

using Witness = std::variant<BlockingPair, DeviationWitness>;

struct StabilityReport {
  Notion notion = Notion::ExternalEps;
  bool holds = true;
  Rational eps;
  std::optional<Witness> witness;
};

std::string format_report(const Instance& inst, const StabilityReport& report);

/// First IR violation (men, then women), else the first unmatched pair with a
/// contract beating both current payoffs by more than eps (men, women, then
/// contract id). Throws std::invalid_argument on an invalid profile.
std::optional<BlockingPair> find_blocking_pair(const Instance& inst, const MatchingProfile& pi, const Rational& eps);

StabilityReport check_individually_rational(const Instance& inst, const MatchingProfile& pi);
StabilityReport is_externally_stable(const Instance& inst, const MatchingProfile& pi, const Rational& eps);

enum class StableVariant { Unilateral, Weak };
/// Blocking with the current actions kept (Weak) or with exactly one side
/// changing action (Unilateral). Only pairs of matched agents whose games
/// have pure actions of compatible sizes can block; singles cannot.
StabilityReport is_stable_variant(const Instance& inst, const MatchingProfile& pi, StableVariant mode);

StabilityReport is_nash_stable(const Instance& inst, const MatchingProfile& pi);

/// Every profitable unilateral deviation must leave an eps-externally
/// unstable profile. Throws std::invalid_argument if pi itself is not
/// eps-externally stable.
StabilityReport is_internally_stable(const Instance& inst, const MatchingProfile& pi, const Rational& eps);

}  // namespace smg
