#include "smg/extensive.hpp"

#include <stdexcept>
#include <string>

namespace smg {

GameTree::GameTree(std::size_t players, std::vector<TreeNode> nodes, std::size_t root)
    : players_(players), nodes_(std::move(nodes)), root_(root) {
  if (players_ == 0) throw std::invalid_argument("game tree needs at least one player");
  if (root_ >= nodes_.size()) throw std::invalid_argument("game tree root out of range");
  std::vector<int> parents(nodes_.size(), 0);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const TreeNode& n = nodes_[id];
    const std::string where = "node " + std::to_string(id);
    if (n.is_leaf()) {
      if (!n.children.empty()) throw std::invalid_argument(where + ": leaf with children");
      if (n.payoff.size() != players_) throw std::invalid_argument(where + ": payoff vector has wrong length");
    } else {
      if (*n.player >= players_) throw std::invalid_argument(where + ": unknown player");
      if (n.children.empty()) throw std::invalid_argument(where + ": decision node without children");
      for (std::size_t c : n.children) {
        if (c >= nodes_.size()) throw std::invalid_argument(where + ": child out of range");
        ++parents[c];
      }
    }
  }
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const int want = id == root_ ? 0 : 1;
    if (parents[id] != want) throw std::invalid_argument("node " + std::to_string(id) + " is not a tree node");
  }
  // Iterative post-order; with one parent per node and a parentless root,
  // every node is reached once iff there is no cycle.
  std::vector<std::size_t> seen;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const TreeNode& n = nodes_[id];
    if (next < n.children.size()) {
      stack.emplace_back(n.children[next++], 0);
    } else {
      seen.push_back(id);
      if (!n.is_leaf()) post_order_.push_back(id);
      stack.pop_back();
    }
  }
  if (seen.size() != nodes_.size()) throw std::invalid_argument("game tree is not connected");
}

const std::vector<Rational>& outcome(const GameTree& tree, const TreeStrategy& s, std::optional<std::size_t> from) {
  std::size_t id = from.value_or(tree.root());
  while (!tree.node(id).is_leaf()) {
    auto it = s.find(id);
    if (it == s.end() || it->second >= tree.node(id).children.size()) {
      throw std::invalid_argument("strategy has no valid choice at node " + std::to_string(id));
    }
    id = tree.node(id).children[it->second];
  }
  return tree.node(id).payoff;
}

bool meets_options(const std::vector<Rational>& payoff, const std::vector<Rational>& outs) {
  if (payoff.size() != outs.size()) throw std::invalid_argument("outside options do not cover every player");
  for (std::size_t k = 0; k < outs.size(); ++k) {
    if (payoff[k] < outs[k]) return false;
  }
  return true;
}

bool is_admissible(const GameTree& tree, const std::vector<Rational>& outs, std::optional<std::size_t> from) {
  if (outs.size() != tree.players()) throw std::invalid_argument("outside options do not cover every player");
  std::vector<std::size_t> stack{from.value_or(tree.root())};
  while (!stack.empty()) {
    const TreeNode& n = tree.node(stack.back());
    stack.pop_back();
    if (n.is_leaf()) {
      if (meets_options(n.payoff, outs)) return true;
    } else {
      stack.insert(stack.end(), n.children.begin(), n.children.end());
    }
  }
  return false;
}

std::optional<TreeStrategy> constrained_spe(const GameTree& tree, const std::vector<Rational>& outs) {
  if (outs.size() != tree.players()) throw std::invalid_argument("outside options do not cover every player");
  // reduced[id] points at the leaf payoff a node collapses to.
  std::vector<const std::vector<Rational>*> reduced(tree.size(), nullptr);
  for (std::size_t id = 0; id < tree.size(); ++id) {
    if (tree.node(id).is_leaf()) reduced[id] = &tree.node(id).payoff;
  }
  TreeStrategy s;
  for (std::size_t id : tree.decision_nodes()) {
    const TreeNode& n = tree.node(id);
    const std::size_t who = *n.player;
    std::optional<std::size_t> best_ok, best_any;
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      const auto& pay = *reduced[n.children[k]];
      if (!best_any || pay[who] > (*reduced[n.children[*best_any]])[who]) best_any = k;
      if (meets_options(pay, outs) && (!best_ok || pay[who] > (*reduced[n.children[*best_ok]])[who])) best_ok = k;
    }
    const std::size_t pick = best_ok ? *best_ok : *best_any;
    s[id] = pick;
    reduced[id] = reduced[n.children[pick]];
  }
  if (!meets_options(*reduced[tree.root()], outs)) return std::nullopt;
  return s;
}

}  // namespace smg
