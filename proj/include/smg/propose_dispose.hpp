#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "smg/instance.hpp"
#include "smg/stability.hpp"

namespace smg {

/// Best option of a proposer. target == nullopt means staying single, in
/// which case objective is the proposer's individually rational payoff.
struct ProposalSolution {
  std::optional<std::size_t> target;
  std::optional<Contract> contract;
  Rational objective;
};

/// P_i(v): maximize the proposer's payoff over all receivers r and contracts
/// whose receiver payoff is at least receiver_payoffs[r] + eps. Ties prefer a
/// receiver over staying single, then the lowest receiver index, then the
/// lowest contract id. `exclude` drops one receiver from the scan.
/// With side == Women the proposer index is a woman and receivers are men.
ProposalSolution solve_Pi(const Instance& inst, std::size_t proposer, const std::vector<Rational>& receiver_payoffs,
                          const Rational& eps, Side side = Side::Men,
                          std::optional<std::size_t> exclude = std::nullopt);

/// P^max: highest receiver payoff over contracts of (proposer, receiver) that
/// leave the proposer at least beta. nullopt (minus infinity) if none.
LowerBound solve_Pmax(const Instance& inst, std::size_t proposer, std::size_t receiver, const Rational& beta,
                      Side side = Side::Men);

/// P^new: best contract for the proposer among those giving the receiver at
/// least lambda (no constraint for minus infinity); ties by lowest id.
/// Throws std::logic_error if nothing qualifies.
Contract solve_Pnew(const Instance& inst, std::size_t proposer, std::size_t receiver, const LowerBound& lambda,
                    Side side = Side::Men);

enum class EventKind { Propose, Single, Accept, Compete, Replace, AutoReplace, Reject };

struct TraceEvent {
  std::size_t iteration = 0;
  EventKind kind = EventKind::Propose;
  std::size_t proposer = 0;
  std::optional<std::size_t> receiver;
  std::optional<std::size_t> incumbent;
  std::optional<Contract> contract;
  LowerBound beta_proposer, lambda_proposer, beta_incumbent, lambda_incumbent;
  std::optional<Rational> receiver_before, receiver_after;
};

/// One event as a line of key=value fields.
std::string to_line(const Instance& inst, Side side, const TraceEvent& e);

struct MarketState {
  Side side = Side::Men;
  std::deque<std::size_t> queue;
  std::vector<Rational> receiver_payoffs;
  std::vector<TraceEvent> trace;
  std::size_t iterations = 0;
};

struct ProposeDisposeResult {
  MatchingProfile profile;
  MarketState state;
};

/// Upper bound on proposals: |proposers| + sum over receivers r of
/// ceil((best payoff r can get on any menu - starting payoff of r) / eps).
std::size_t iteration_bound(const Instance& inst, const Rational& eps, Side side);

/// Propose-dispose with a FIFO queue of proposers; the loser of a competition
/// proposes next. Throws std::invalid_argument unless eps > 0.
ProposeDisposeResult run_propose_dispose(const Instance& inst, const Rational& eps, Side side = Side::Men);

/// Runs eps = eps0, eps0/2, ... until two consecutive runs return the same
/// profile (or max_runs is reached) and reports the exact eps = 0 verdict.
struct LimitResult {
  MatchingProfile profile;
  Rational final_eps;
  std::size_t runs = 0;
  bool settled = false;
  StabilityReport exact;
};
LimitResult propose_dispose_limit(const Instance& inst, Side side, const Rational& eps0 = 1, std::size_t max_runs = 16);

}  // namespace smg
