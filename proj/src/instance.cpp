#include "smg/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smg {

namespace {

void require_distinct(const std::vector<std::string>& names, const std::vector<std::string>& other) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("agent names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate agent name '" + n + "'");
  }
  for (const auto& n : other) {
    if (seen.count(n)) throw std::invalid_argument("agent name '" + n + "' used on both sides");
  }
}

}  // namespace

Instance::Instance(std::vector<std::string> men, std::vector<std::string> women, std::vector<Rational> irp_men,
                   std::vector<Rational> irp_women, std::vector<std::vector<Game>> games)
    : men_(std::move(men)),
      women_(std::move(women)),
      irp_men_(std::move(irp_men)),
      irp_women_(std::move(irp_women)),
      games_(std::move(games)) {
  require_distinct(men_, women_);
  require_distinct(women_, {});
  if (irp_men_.size() != men_.size()) throw std::invalid_argument("one individually rational payoff per man required");
  if (irp_women_.size() != women_.size()) {
    throw std::invalid_argument("one individually rational payoff per woman required");
  }
  if (games_.size() != men_.size()) throw std::invalid_argument("games must cover every man");
  for (std::size_t i = 0; i < games_.size(); ++i) {
    if (games_[i].size() != women_.size()) {
      throw std::invalid_argument("games must cover every woman for man '" + men_[i] + "'");
    }
  }
}

std::optional<std::size_t> Instance::man_index(const std::string& name) const {
  auto it = std::find(men_.begin(), men_.end(), name);
  if (it == men_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - men_.begin());
}

std::optional<std::size_t> Instance::woman_index(const std::string& name) const {
  auto it = std::find(women_.begin(), women_.end(), name);
  if (it == women_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - women_.begin());
}

std::size_t Instance::max_menu_size() const {
  std::size_t best = 0;
  for (const auto& row : games_)
    for (const auto& g : row) best = std::max(best, g.menu().size());
  return best;
}

MatchingProfile::MatchingProfile(std::size_t men, std::size_t women)
    : man_partner_(men), woman_partner_(women), contract_(men) {}

MatchingProfile MatchingProfile::all_single(const Instance& inst) {
  return MatchingProfile(inst.num_men(), inst.num_women());
}

void MatchingProfile::match(std::size_t i, std::size_t j, Contract c) {
  if (man_partner_.at(i) || woman_partner_.at(j)) throw std::logic_error("match: agent already matched");
  man_partner_[i] = j;
  woman_partner_[j] = i;
  contract_[i] = std::move(c);
}

void MatchingProfile::unmatch_man(std::size_t i) {
  if (auto j = man_partner_.at(i)) woman_partner_[*j].reset();
  man_partner_[i].reset();
  contract_[i].reset();
}

void MatchingProfile::set_contract(std::size_t i, Contract c) {
  if (!man_partner_.at(i)) throw std::logic_error("set_contract: man is single");
  contract_[i] = std::move(c);
}

const Contract* MatchingProfile::contract_of_man(std::size_t i) const {
  return contract_.at(i) ? &*contract_[i] : nullptr;
}

const Contract* MatchingProfile::contract_of_woman(std::size_t j) const {
  auto i = woman_partner_.at(j);
  return i ? contract_of_man(*i) : nullptr;
}

std::vector<std::pair<std::size_t, std::size_t>> MatchingProfile::couples() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < man_partner_.size(); ++i) {
    if (man_partner_[i]) out.emplace_back(i, *man_partner_[i]);
  }
  return out;
}

Rational MatchingProfile::u(const Instance& inst, std::size_t i) const {
  const auto* c = contract_of_man(i);
  return c ? c->u : inst.irp_man(i);
}

Rational MatchingProfile::v(const Instance& inst, std::size_t j) const {
  const auto* c = contract_of_woman(j);
  return c ? c->v : inst.irp_woman(j);
}

void validate_profile(const Instance& inst, const MatchingProfile& pi) {
  if (pi.num_men() != inst.num_men() || pi.num_women() != inst.num_women()) {
    throw std::invalid_argument("profile size does not match the instance");
  }
  for (std::size_t i = 0; i < pi.num_men(); ++i) {
    auto j = pi.partner_of_man(i);
    if (!j) {
      if (pi.contract_of_man(i)) throw std::invalid_argument("single man '" + inst.man(i) + "' holds a contract");
      continue;
    }
    if (*j >= inst.num_women() || pi.partner_of_woman(*j) != i) {
      throw std::invalid_argument("matching is not a partial injection at man '" + inst.man(i) + "'");
    }
    const auto* c = pi.contract_of_man(i);
    if (!c) throw std::invalid_argument("couple of man '" + inst.man(i) + "' has no contract");
    if (!inst.game(i, *j).owns(*c)) {
      throw std::invalid_argument("contract " + std::to_string(c->id) + " is not on the menu of (" + inst.man(i) +
                                  ", " + inst.woman(*j) + ")");
    }
  }
  for (std::size_t j = 0; j < pi.num_women(); ++j) {
    auto i = pi.partner_of_woman(j);
    if (i && (*i >= inst.num_men() || pi.partner_of_man(*i) != j)) {
      throw std::invalid_argument("matching is not a partial injection at woman '" + inst.woman(j) + "'");
    }
  }
}

}  // namespace smg
