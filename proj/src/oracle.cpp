#include "smg/oracle.hpp"

#include <map>
#include <stdexcept>

#include "smg/stability.hpp"

namespace smg {

namespace {

// Profiles for men i.. given the set of women already used.
Rational count_from(const Instance& inst, std::size_t i, std::uint64_t used, std::map<std::pair<std::size_t, std::uint64_t>, Rational>& memo) {
  if (i == inst.num_men()) return 1;
  auto key = std::make_pair(i, used);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational total = count_from(inst, i + 1, used, memo);
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (used >> j & 1) continue;
    total += Rational(static_cast<long long>(inst.game(i, j).menu().size())) *
             count_from(inst, i + 1, used | (std::uint64_t{1} << j), memo);
  }
  memo.emplace(key, total);
  return total;
}

bool walk(const Instance& inst, std::size_t i, MatchingProfile& pi,
          const std::function<bool(const MatchingProfile&)>& visit) {
  if (i == inst.num_men()) return visit(pi);
  if (!walk(inst, i + 1, pi, visit)) return false;
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (pi.partner_of_woman(j)) continue;
    for (const auto& c : inst.game(i, j).menu()) {
      pi.match(i, j, c);
      const bool go_on = walk(inst, i + 1, pi, visit);
      pi.unmatch_man(i);
      if (!go_on) return false;
    }
  }
  return true;
}

}  // namespace

Rational count_profiles(const Instance& inst) {
  if (inst.num_women() > 63) throw std::length_error("too many women to enumerate");
  std::map<std::pair<std::size_t, std::uint64_t>, Rational> memo;
  return count_from(inst, 0, 0, memo);
}

void for_each_profile(const Instance& inst, const std::function<bool(const MatchingProfile&)>& visit) {
  MatchingProfile pi = MatchingProfile::all_single(inst);
  walk(inst, 0, pi, visit);
}

std::string_view to_string(OracleNotion n) {
  switch (n) {
    case OracleNotion::External: return "external";
    case OracleNotion::Internal: return "internal";
    case OracleNotion::Nash: return "nash";
    case OracleNotion::Unilateral: return "unilateral";
    case OracleNotion::Weak: return "weak";
  }
  return "?";
}

bool satisfies(const Instance& inst, const MatchingProfile& pi, const Rational& eps, OracleNotion notion) {
  switch (notion) {
    case OracleNotion::External: return is_externally_stable(inst, pi, eps).holds;
    case OracleNotion::Internal:
      return is_externally_stable(inst, pi, eps).holds && is_internally_stable(inst, pi, eps).holds;
    case OracleNotion::Nash: return is_nash_stable(inst, pi).holds;
    case OracleNotion::Unilateral: return is_stable_variant(inst, pi, StableVariant::Unilateral).holds;
    case OracleNotion::Weak: return is_stable_variant(inst, pi, StableVariant::Weak).holds;
  }
  return false;
}

std::vector<MatchingProfile> enumerate_stable(const Instance& inst, const Rational& eps, OracleNotion notion,
                                              std::uint64_t cap) {
  const Rational n = count_profiles(inst);
  if (n > Rational(static_cast<long long>(cap))) {
    throw std::length_error("enumeration needs " + n.str() + " profiles, cap is " + std::to_string(cap));
  }
  std::vector<MatchingProfile> out;
  for_each_profile(inst, [&](const MatchingProfile& pi) {
    if (satisfies(inst, pi, eps, notion)) out.push_back(pi);
    return true;
  });
  return out;
}

std::vector<Contract> pareto_frontier(const Game& game) {
  std::vector<Contract> out;
  const auto& menu = game.menu();
  for (const auto& c : menu) {
    bool beaten = false;
    for (const auto& d : menu) {
      if (d.u > c.u && d.v > c.v) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(c);
  }
  return out;
}

std::vector<Contract> brute_force_cne(const Game& game, const OutsideOptions& oo) {
  std::vector<Contract> out;
  for (const auto& c : game.menu()) {
    if (is_cne(game, c, oo)) out.push_back(c);
  }
  return out;
}

}  // namespace smg
