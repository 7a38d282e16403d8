#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smg/cne.hpp"
#include "smg/instance.hpp"

namespace smg {

enum class RefineStatus { Converged, PassLimit, Infeasible };
std::string_view to_string(RefineStatus s);

enum class RefineAction { Keep, Frozen, Nash, Replace, Fail };

struct RefineEvent {
  std::size_t pass = 0;
  std::size_t man = 0;
  std::size_t woman = 0;
  RefineAction action = RefineAction::Keep;
  OutsideOptions options;
  Contract before;
  std::optional<Contract> after;
};

std::string to_line(const Instance& inst, const RefineEvent& e);

struct RefineOptions {
  /// Per-class policy; classes not listed use default_policy.
  std::map<GameClass, CnePolicy> policies;
  /// 0 picks 10 * (largest menu) * (number of couples), at least 1.
  std::size_t max_passes = 0;
  /// Assert eps-external stability after every replacement.
  bool check_each_step = false;
};

struct RefineResult {
  MatchingProfile profile;
  RefineStatus status = RefineStatus::Converged;
  std::size_t passes = 0;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  std::optional<CneFailure> failure;
  std::vector<RefineEvent> trace;
};

/// Repeatedly visit couples in ascending man order and replace any contract
/// that is not a constrained Nash equilibrium for the couple's current
/// outside options; a feasible Nash equilibrium is preferred and freezes the
/// couple. Stops after a pass without changes. Throws std::invalid_argument
/// if pi is not eps-externally stable.
RefineResult refine(const Instance& inst, const MatchingProfile& pi, const Rational& eps,
                    const RefineOptions& options = {});

}  // namespace smg
