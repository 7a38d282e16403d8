#include "smg/refine.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "smg/stability.hpp"

namespace smg {

std::string_view to_string(RefineStatus s) {
  switch (s) {
    case RefineStatus::Converged: return "Converged";
    case RefineStatus::PassLimit: return "PassLimit";
    case RefineStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

namespace {

std::string_view action_name(RefineAction a) {
  switch (a) {
    case RefineAction::Keep: return "keep";
    case RefineAction::Frozen: return "frozen";
    case RefineAction::Nash: return "nash";
    case RefineAction::Replace: return "replace";
    case RefineAction::Fail: return "fail";
  }
  return "?";
}

}  // namespace

std::string to_line(const Instance& inst, const RefineEvent& e) {
  std::ostringstream os;
  os << "pass=" << e.pass << " event=" << action_name(e.action) << " man=" << inst.man(e.man)
     << " woman=" << inst.woman(e.woman) << " u0=" << to_string(e.options.u0) << " v0=" << to_string(e.options.v0)
     << " from=" << e.before.id << " u=" << e.before.u << " v=" << e.before.v;
  if (e.after) os << " to=" << e.after->id << " u_new=" << e.after->u << " v_new=" << e.after->v;
  return os.str();
}

RefineResult refine(const Instance& inst, const MatchingProfile& pi, const Rational& eps, const RefineOptions& options) {
  if (auto bp = find_blocking_pair(inst, pi, eps)) {
    throw std::invalid_argument("refine needs an eps-externally stable profile");
  }
  for (const auto& [cls, pol] : options.policies) {
    if (!policy_applies(pol, cls)) {
      throw std::invalid_argument("policy '" + std::string(to_string(pol)) + "' does not apply to " +
                                  std::string(to_string(cls)) + " games");
    }
  }
  RefineResult res;
  res.profile = pi;
  const auto couples = pi.couples();
  const std::size_t cap =
      options.max_passes ? options.max_passes : std::max<std::size_t>(1, 10 * inst.max_menu_size() * couples.size());
  std::set<std::size_t> frozen;

  auto policy_for = [&](GameClass c) {
    auto it = options.policies.find(c);
    return it == options.policies.end() ? default_policy(c) : it->second;
  };

  for (std::size_t pass = 1; pass <= cap; ++pass) {
    res.passes = pass;
    bool changed = false;
    for (auto [i, j] : couples) {
      const Game& g = inst.game(i, j);
      RefineEvent ev;
      ev.pass = pass;
      ev.man = i;
      ev.woman = j;
      ev.before = *res.profile.contract_of_man(i);
      ev.options = effective_outside_options(inst, res.profile, i, j, eps);
      if (frozen.count(i)) {
        ev.action = RefineAction::Frozen;
        res.trace.push_back(ev);
        continue;
      }
      if (is_cne(g, ev.before, ev.options)) {
        ev.action = RefineAction::Keep;
        res.trace.push_back(ev);
        continue;
      }
      std::optional<Contract> next;
      for (const auto& c : g.menu()) {
        if (is_feasible(c, ev.options) && g.is_nash(c)) {
          next = c;
          break;
        }
      }
      if (next) {
        frozen.insert(i);
        ev.action = RefineAction::Nash;
      } else {
        CneResult r = solve_cne(g, ev.options, policy_for(g.kind()));
        if (!r.contract) {
          ev.action = RefineAction::Fail;
          res.trace.push_back(ev);
          res.status = RefineStatus::Infeasible;
          res.offending = std::make_pair(i, j);
          res.failure = r.failure;
          return res;
        }
        next = r.contract;
        ev.action = RefineAction::Replace;
      }
      ev.after = next;
      res.profile.set_contract(i, *next);
      res.trace.push_back(ev);
      changed = true;
      if (options.check_each_step && find_blocking_pair(inst, res.profile, eps)) {
        throw std::logic_error("refine step broke eps-external stability");
      }
    }
    if (!changed) {
      res.status = RefineStatus::Converged;
      return res;
    }
  }
  res.status = RefineStatus::PassLimit;
  return res;
}

}  // namespace smg
