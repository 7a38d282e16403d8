#include "smg/cne.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smg {

namespace {

OutsideOptions options_with_shift(const Instance& inst, const MatchingProfile& pi, std::size_t i, std::size_t j,
                                  const Rational& eps, const Rational& shift) {
  if (pi.partner_of_man(i) != j) throw std::invalid_argument("outside options requested for an unmatched pair");
  Rational u0 = inst.irp_man(i);
  for (std::size_t b = 0; b < inst.num_women(); ++b) {
    if (b == j) continue;
    const Rational floor = pi.v(inst, b) + eps;
    for (const auto& c : inst.game(i, b).menu()) {
      if (c.v > floor) u0 = std::max(u0, c.u - shift);
    }
  }
  Rational v0 = inst.irp_woman(j);
  for (std::size_t a = 0; a < inst.num_men(); ++a) {
    if (a == i) continue;
    const Rational floor = pi.u(inst, a) + eps;
    for (const auto& c : inst.game(a, j).menu()) {
      if (c.u > floor) v0 = std::max(v0, c.v - shift);
    }
  }
  return {u0, v0};
}

Rational at_least(const LowerBound& b, const Rational& x) { return b ? std::max(*b, x) : x; }

std::vector<const Contract*> feasible_contracts(const Game& game, const OutsideOptions& oo) {
  std::vector<const Contract*> out;
  for (const auto& c : game.menu()) {
    if (is_feasible(c, oo)) out.push_back(&c);
  }
  return out;
}

CneResult found(const Game& game, const Contract& c, const OutsideOptions& oo, const char* who) {
  if (!is_cne(game, c, oo)) throw std::logic_error(std::string(who) + " produced a contract that is not a CNE");
  return {c, std::nullopt};
}

CneResult scan_any(const Game& game, const OutsideOptions& oo) {
  for (const auto& c : game.menu()) {
    if (is_cne(game, c, oo)) return {c, std::nullopt};
  }
  return {std::nullopt, CneFailure::NotFeasibleGame};
}

CneResult solve_median(const Game& game, const OutsideOptions& oo) {
  const auto target = median_level(game, oo);
  if (!target) return {std::nullopt, CneFailure::Infeasible};
  const LowerBound lower = oo.u0 ? LowerBound(game.level_for_u(*oo.u0)) : std::nullopt;
  const std::optional<Rational> upper = oo.v0 ? std::optional<Rational>(game.level_for_v(*oo.v0)) : std::nullopt;
  auto inside = [&](const Rational& x) { return (!lower || x >= *lower) && (!upper || x <= *upper); };

  if (auto id = game.at_level(*target)) return found(game, game.contract(*id), oo, "median rule");
  const auto& menu = game.menu();
  if (*target > game.pivot()) {
    // Snap up to the first level meeting player 1's bound.
    for (const auto& c : menu) {
      if (game.level_of(c) >= *target) {
        if (inside(game.level_of(c))) return found(game, c, oo, "median rule");
        break;
      }
    }
  } else {
    for (auto it = menu.rbegin(); it != menu.rend(); ++it) {
      if (game.level_of(*it) <= *target) {
        if (inside(game.level_of(*it))) return found(game, *it, oo, "median rule");
        break;
      }
    }
  }
  return {std::nullopt, CneFailure::Infeasible};
}

CneResult solve_repeated(const Game& game, const OutsideOptions& oo) {
  const Rational a = game.alpha();
  const Rational b = game.beta();
  const auto feasible = feasible_contracts(game, oo);
  if (feasible.empty()) return {std::nullopt, CneFailure::Infeasible};
  for (const auto* c : feasible) {
    if (c->u >= a && c->v >= b) return found(game, *c, oo, "repeated oracle");
  }
  const Contract* best = nullptr;
  if (oo.u0 && *oo.u0 >= a) {
    for (const auto* c : feasible) {
      if (!best || c->v > best->v || (c->v == best->v && c->u > best->u)) best = c;
    }
  } else if (oo.v0 && *oo.v0 >= b) {
    for (const auto* c : feasible) {
      if (!best || c->u > best->u || (c->u == best->u && c->v > best->v)) best = c;
    }
  }
  if (!best) throw std::logic_error("repeated oracle: feasible menu points but no case applies");
  return found(game, *best, oo, "repeated oracle");
}

}  // namespace

OutsideOptions outside_options(const Instance& inst, const MatchingProfile& pi, std::size_t i, std::size_t j,
                               const Rational& eps) {
  return options_with_shift(inst, pi, i, j, eps, 0);
}

OutsideOptions effective_outside_options(const Instance& inst, const MatchingProfile& pi, std::size_t i,
                                         std::size_t j, const Rational& eps) {
  return options_with_shift(inst, pi, i, j, eps, eps);
}

bool is_feasible(const Contract& c, const OutsideOptions& oo) {
  return (!oo.u0 || c.u >= *oo.u0) && (!oo.v0 || c.v >= *oo.v0);
}

bool is_cne(const Game& game, const Contract& c, const OutsideOptions& oo) {
  if (!is_feasible(c, oo)) return false;
  for (std::size_t id : game.profitable_deviations(c, Role::Row)) {
    if (!oo.v0 || !(game.contract(id).v < *oo.v0)) return false;
  }
  for (std::size_t id : game.profitable_deviations(c, Role::Col)) {
    if (!oo.u0 || !(game.contract(id).u < *oo.u0)) return false;
  }
  return true;
}

std::string_view to_string(CnePolicy p) {
  switch (p) {
    case CnePolicy::Any: return "any";
    case CnePolicy::PreferNash: return "prefer-nash";
    case CnePolicy::MaxPotential: return "max-potential";
    case CnePolicy::RepeatedOracle: return "repeated";
    case CnePolicy::ZeroSumMedian: return "zero-sum";
  }
  return "?";
}

std::string_view to_string(CneFailure f) {
  return f == CneFailure::Infeasible ? "INFEASIBLE" : "NOT_FEASIBLE_GAME";
}

CnePolicy default_policy(GameClass c) {
  switch (c) {
    case GameClass::FiniteBimatrix: return CnePolicy::PreferNash;
    case GameClass::ZeroSum:
    case GameClass::StrictlyCompetitive:
    case GameClass::Transfer: return CnePolicy::ZeroSumMedian;
    case GameClass::Potential: return CnePolicy::MaxPotential;
    case GameClass::RepeatedStage: return CnePolicy::RepeatedOracle;
  }
  return CnePolicy::Any;
}

bool policy_applies(CnePolicy p, GameClass c) {
  switch (p) {
    case CnePolicy::Any:
    case CnePolicy::PreferNash: return true;
    case CnePolicy::MaxPotential: return c == GameClass::Potential;
    case CnePolicy::RepeatedOracle: return c == GameClass::RepeatedStage;
    case CnePolicy::ZeroSumMedian:
      return c == GameClass::ZeroSum || c == GameClass::StrictlyCompetitive || c == GameClass::Transfer;
  }
  return false;
}

std::optional<Rational> median_level(const Game& game, const OutsideOptions& oo) {
  if (!game.is_level_class()) throw std::invalid_argument("median rule needs a zero-sum, competitive or transfer game");
  Rational target = game.pivot();
  if (oo.u0) target = std::max(target, game.level_for_u(*oo.u0));
  if (oo.v0) {
    const Rational upper = game.level_for_v(*oo.v0);
    if (oo.u0 && game.level_for_u(*oo.u0) > upper) return std::nullopt;
    target = std::min(target, upper);
  }
  return target;
}

CneResult solve_cne(const Game& game, const OutsideOptions& oo, CnePolicy policy) {
  if (!policy_applies(policy, game.kind())) {
    throw std::invalid_argument("policy '" + std::string(to_string(policy)) + "' does not apply to " +
                                std::string(to_string(game.kind())) + " games");
  }
  switch (policy) {
    case CnePolicy::ZeroSumMedian: return solve_median(game, oo);
    case CnePolicy::RepeatedOracle: return solve_repeated(game, oo);
    default: break;
  }
  const auto feasible = feasible_contracts(game, oo);
  if (feasible.empty()) return {std::nullopt, CneFailure::Infeasible};
  switch (policy) {
    case CnePolicy::PreferNash:
      for (const auto* c : feasible) {
        if (game.is_nash(*c)) return {*c, std::nullopt};
      }
      return scan_any(game, oo);
    case CnePolicy::MaxPotential: {
      const Contract* best = feasible.front();
      for (const auto* c : feasible) {
        if (game.potential_of(*c) > game.potential_of(*best)) best = c;
      }
      return found(game, *best, oo, "potential maximization");
    }
    default: return scan_any(game, oo);
  }
}

std::optional<Point> repeated_cne_payoff(const Matrix& U, const Matrix& V, const OutsideOptions& oo) {
  const auto hull = feasible_payoff_hull(U, V);
  const auto [alpha, beta] = punishment_levels(U, V);
  const auto region = hull.clip_lower(oo.u0, oo.v0);
  if (region.empty()) return std::nullopt;

  const auto inner = hull.clip_lower(at_least(oo.u0, alpha), at_least(oo.v0, beta));
  const auto& pts = inner.empty() ? region.vertices() : inner.vertices();
  const Point* best = nullptr;
  for (const auto& p : pts) {
    if (!best) {
      best = &p;
    } else if (!inner.empty()) {
      const Rational s = p.u + p.v;
      const Rational t = best->u + best->v;
      if (s > t || (s == t && p.u > best->u)) best = &p;
    } else if (oo.u0 && *oo.u0 >= alpha) {
      // Player 1 is safe; push player 2 as high as the options allow.
      if (p.v > best->v || (p.v == best->v && p.u > best->u)) best = &p;
    } else {
      if (p.u > best->u || (p.u == best->u && p.v > best->v)) best = &p;
    }
  }
  return *best;
}

}  // namespace smg
