#include "smg/stability.hpp"

#include <sstream>
#include <stdexcept>

namespace smg {

std::string_view to_string(Notion n) {
  switch (n) {
    case Notion::IR: return "IR";
    case Notion::ExternalEps: return "ExternalEps";
    case Notion::External0: return "External0";
    case Notion::Unilateral: return "Unilateral";
    case Notion::Weak: return "Weak";
    case Notion::Nash: return "Nash";
    case Notion::Internal: return "Internal";
  }
  return "?";
}

namespace {

StabilityReport holds(Notion n, const Rational& eps = 0) { return {n, true, eps, std::nullopt}; }
StabilityReport fails(Notion n, Witness w, const Rational& eps = 0) { return {n, false, eps, std::move(w)}; }

std::optional<BlockingPair> ir_violation(const Instance& inst, const MatchingProfile& pi) {
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    if (pi.u(inst, i) < inst.irp_man(i)) return BlockingPair{i, std::nullopt, std::nullopt};
  }
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (pi.v(inst, j) < inst.irp_woman(j)) return BlockingPair{std::nullopt, j, std::nullopt};
  }
  return std::nullopt;
}

std::optional<BlockingPair> blocking_unchecked(const Instance& inst, const MatchingProfile& pi, const Rational& eps) {
  if (auto ir = ir_violation(inst, pi)) return ir;
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    const Rational ui = pi.u(inst, i) + eps;
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      if (pi.partner_of_man(i) == j) continue;
      const Rational vj = pi.v(inst, j) + eps;
      for (const auto& c : inst.game(i, j).menu()) {
        if (c.u > ui && c.v > vj) return BlockingPair{i, j, c};
      }
    }
  }
  return std::nullopt;
}

std::string agent_or_empty(const Instance& inst, const std::optional<std::size_t>& k, bool man) {
  if (!k) return man ? "i0" : "j0";
  return man ? inst.man(*k) : inst.woman(*k);
}

}  // namespace

std::string format_report(const Instance& inst, const StabilityReport& r) {
  std::ostringstream os;
  os << to_string(r.notion) << ": holds=" << (r.holds ? "true" : "false");
  if (r.notion == Notion::ExternalEps || r.notion == Notion::Internal) os << " eps=" << r.eps;
  if (r.witness) {
    os << "\nwitness: ";
    if (const auto* bp = std::get_if<BlockingPair>(&*r.witness)) {
      os << "blocking pair (" << agent_or_empty(inst, bp->man, true) << ", " << agent_or_empty(inst, bp->woman, false)
         << ")";
      if (bp->contract) os << " contract=" << bp->contract->id << " u=" << bp->contract->u << " v=" << bp->contract->v;
      if (!bp->man || !bp->woman) os << " individually rational payoff violated";
    } else {
      const auto& d = std::get<DeviationWitness>(*r.witness);
      os << "deviation by " << (d.deviator == Role::Row ? inst.man(d.man) : inst.woman(d.woman)) << " in couple ("
         << inst.man(d.man) << ", " << inst.woman(d.woman) << ") from contract " << d.from.id << " (u=" << d.from.u
         << " v=" << d.from.v << ") to " << d.to.id << " (u=" << d.to.u << " v=" << d.to.v << ")";
    }
  }
  return os.str();
}

std::optional<BlockingPair> find_blocking_pair(const Instance& inst, const MatchingProfile& pi, const Rational& eps) {
  if (eps.sign() < 0) throw std::invalid_argument("eps must be nonnegative");
  validate_profile(inst, pi);
  return blocking_unchecked(inst, pi, eps);
}

StabilityReport check_individually_rational(const Instance& inst, const MatchingProfile& pi) {
  validate_profile(inst, pi);
  if (auto w = ir_violation(inst, pi)) return fails(Notion::IR, *w);
  return holds(Notion::IR);
}

StabilityReport is_externally_stable(const Instance& inst, const MatchingProfile& pi, const Rational& eps) {
  const Notion n = eps.sign() == 0 ? Notion::External0 : Notion::ExternalEps;
  if (auto w = find_blocking_pair(inst, pi, eps)) return fails(n, *w, eps);
  return holds(n, eps);
}

StabilityReport is_stable_variant(const Instance& inst, const MatchingProfile& pi, StableVariant mode) {
  validate_profile(inst, pi);
  const Notion n = mode == StableVariant::Weak ? Notion::Weak : Notion::Unilateral;
  if (auto w = ir_violation(inst, pi)) return fails(n, *w);
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    const auto mi = pi.partner_of_man(i);
    if (!mi) continue;
    const auto xi = inst.game(i, *mi).pure_cell(*pi.contract_of_man(i));
    if (!xi) continue;
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      const auto wj = pi.partner_of_woman(j);
      if (!wj || *wj == i) continue;
      const auto yj = inst.game(*wj, j).pure_cell(*pi.contract_of_woman(j));
      const Game& g = inst.game(i, j);
      if (!yj || !g.has_pure_actions() || xi->row >= g.rows() || yj->col >= g.cols()) continue;
      const Rational ui = pi.u(inst, i);
      const Rational vj = pi.v(inst, j);
      auto blocks = [&](std::size_t r, std::size_t c) -> std::optional<Witness> {
        const auto& k = g.contract(r * g.cols() + c);
        if (k.u > ui && k.v > vj) return BlockingPair{i, j, k};
        return std::nullopt;
      };
      if (mode == StableVariant::Weak) {
        if (auto w = blocks(xi->row, yj->col)) return fails(n, *w);
        continue;
      }
      for (std::size_t r = 0; r < g.rows(); ++r)
        if (auto w = blocks(r, yj->col)) return fails(n, *w);
      for (std::size_t c = 0; c < g.cols(); ++c)
        if (auto w = blocks(xi->row, c)) return fails(n, *w);
    }
  }
  return holds(n);
}

StabilityReport is_nash_stable(const Instance& inst, const MatchingProfile& pi) {
  validate_profile(inst, pi);
  for (auto [i, j] : pi.couples()) {
    const Game& g = inst.game(i, j);
    const Contract& c = *pi.contract_of_man(i);
    for (Role who : {Role::Row, Role::Col}) {
      const auto devs = g.profitable_deviations(c, who);
      if (!devs.empty()) return fails(Notion::Nash, DeviationWitness{i, j, who, c, g.contract(devs.front())});
    }
  }
  return holds(Notion::Nash);
}

StabilityReport is_internally_stable(const Instance& inst, const MatchingProfile& pi, const Rational& eps) {
  if (find_blocking_pair(inst, pi, eps)) {
    throw std::invalid_argument("internal stability is only defined for externally stable profiles");
  }
  for (auto [i, j] : pi.couples()) {
    const Game& g = inst.game(i, j);
    const Contract c = *pi.contract_of_man(i);
    for (Role who : {Role::Row, Role::Col}) {
      for (std::size_t id : g.profitable_deviations(c, who)) {
        MatchingProfile deviated = pi;
        deviated.set_contract(i, g.contract(id));
        if (!blocking_unchecked(inst, deviated, eps)) {
          return fails(Notion::Internal, DeviationWitness{i, j, who, c, g.contract(id)}, eps);
        }
      }
    }
  }
  return holds(Notion::Internal, eps);
}

}  // namespace smg
