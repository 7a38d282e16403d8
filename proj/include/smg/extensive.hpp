#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "smg/rational.hpp"

namespace smg {

/// A node is either a decision node (player, children) or a leaf carrying
/// one payoff per player.
struct TreeNode {
  std::optional<std::size_t> player;
  std::vector<std::size_t> children;
  std::vector<Rational> payoff;

  bool is_leaf() const { return !player.has_value(); }
};

/// Finite perfect-information game tree with n players, stored as an arena.
class GameTree {
 public:
  /// Throws std::invalid_argument unless the nodes form a tree rooted at
  /// `root` covering every node, decision nodes have children and a valid
  /// player, and every leaf has exactly `players` payoffs.
  GameTree(std::size_t players, std::vector<TreeNode> nodes, std::size_t root);

  std::size_t players() const { return players_; }
  std::size_t root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode& node(std::size_t id) const { return nodes_.at(id); }
  /// Decision nodes in post-order (children before parents).
  const std::vector<std::size_t>& decision_nodes() const { return post_order_; }

 private:
  std::size_t players_;
  std::vector<TreeNode> nodes_;
  std::size_t root_;
  std::vector<std::size_t> post_order_;
};

/// Decision node -> index of the chosen child.
using TreeStrategy = std::map<std::size_t, std::size_t>;

/// Leaf payoffs reached from `from` when everyone follows s. Throws
/// std::invalid_argument if s misses a node on the path.
const std::vector<Rational>& outcome(const GameTree& tree, const TreeStrategy& s, std::optional<std::size_t> from = {});

/// Every player gets at least his outside option.
bool meets_options(const std::vector<Rational>& payoff, const std::vector<Rational>& outs);

/// Some leaf below `from` (default: the root) meets every outside option.
bool is_admissible(const GameTree& tree, const std::vector<Rational>& outs, std::optional<std::size_t> from = {});

/// Backward induction: each decision node picks, among children whose
/// reduced outcome meets all options, the one best for its player; with no
/// such child it maximizes unconstrained. Ties go to the lowest index.
/// Absent when the whole tree is not admissible.
std::optional<TreeStrategy> constrained_spe(const GameTree& tree, const std::vector<Rational>& outs);

}  // namespace smg
