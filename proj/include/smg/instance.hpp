#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smg/game.hpp"

namespace smg {

enum class Side { Men, Women };

/// A two-sided market: one game per (man, woman) pair plus the payoff of
/// staying single. Agents are addressed by index; names are for I/O.
class Instance {
 public:
  /// games[i][j] is the game of man i with woman j. Throws
  /// std::invalid_argument on duplicate names or missing games.
  Instance(std::vector<std::string> men, std::vector<std::string> women, std::vector<Rational> irp_men,
           std::vector<Rational> irp_women, std::vector<std::vector<Game>> games);

  std::size_t num_men() const { return men_.size(); }
  std::size_t num_women() const { return women_.size(); }
  const std::string& man(std::size_t i) const { return men_.at(i); }
  const std::string& woman(std::size_t j) const { return women_.at(j); }
  const std::vector<std::string>& men() const { return men_; }
  const std::vector<std::string>& women() const { return women_; }
  const Rational& irp_man(std::size_t i) const { return irp_men_.at(i); }
  const Rational& irp_woman(std::size_t j) const { return irp_women_.at(j); }
  const Game& game(std::size_t i, std::size_t j) const { return games_.at(i).at(j); }

  std::optional<std::size_t> man_index(const std::string& name) const;
  std::optional<std::size_t> woman_index(const std::string& name) const;

  /// Largest menu size over all couples.
  std::size_t max_menu_size() const;

 private:
  std::vector<std::string> men_, women_;
  std::vector<Rational> irp_men_, irp_women_;
  std::vector<std::vector<Game>> games_;
};

/// (mu, x, y): a partial matching plus one menu contract per couple.
class MatchingProfile {
 public:
  MatchingProfile() = default;
  MatchingProfile(std::size_t men, std::size_t women);
  static MatchingProfile all_single(const Instance& inst);

  std::size_t num_men() const { return man_partner_.size(); }
  std::size_t num_women() const { return woman_partner_.size(); }

  /// Throws std::logic_error if either agent is already matched.
  void match(std::size_t i, std::size_t j, Contract c);
  void unmatch_man(std::size_t i);
  void set_contract(std::size_t i, Contract c);

  std::optional<std::size_t> partner_of_man(std::size_t i) const { return man_partner_.at(i); }
  std::optional<std::size_t> partner_of_woman(std::size_t j) const { return woman_partner_.at(j); }
  const Contract* contract_of_man(std::size_t i) const;
  const Contract* contract_of_woman(std::size_t j) const;

  /// Matched couples in ascending man order.
  std::vector<std::pair<std::size_t, std::size_t>> couples() const;

  /// Current payoffs; singles receive their individually rational payoff.
  Rational u(const Instance& inst, std::size_t i) const;
  Rational v(const Instance& inst, std::size_t j) const;

  friend bool operator==(const MatchingProfile&, const MatchingProfile&) = default;

 private:
  std::vector<std::optional<std::size_t>> man_partner_;
  std::vector<std::optional<std::size_t>> woman_partner_;
  std::vector<std::optional<Contract>> contract_;
};

/// Throws std::invalid_argument if the profile does not fit the instance or
/// names a contract that is not on the couple's menu.
void validate_profile(const Instance& inst, const MatchingProfile& pi);

}  // namespace smg
