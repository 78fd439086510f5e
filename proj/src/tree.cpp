#include "rmqbatch/tree.hpp"

#include <stdexcept>
#include <string>

namespace rmqbatch {

LabeledTree LabeledTree::from_parents(std::vector<NodeId> parents) {
  const std::size_t n = parents.size();
  if (n == 0) throw std::invalid_argument("tree needs at least one node");
  if (n >= kNoNode) throw std::length_error("tree too large");

  LabeledTree tree;
  tree.first_child_.assign(n, kNoNode);
  tree.next_sibling_.assign(n, kNoNode);
  for (std::size_t v = n; v-- > 0;) {
    const NodeId p = parents[v];
    if (p == kNoNode) {
      if (tree.root_ != kNoNode) throw std::invalid_argument("tree has more than one root");
      tree.root_ = static_cast<NodeId>(v);
      continue;
    }
    if (p >= n || p == v) {
      throw std::invalid_argument("node " + std::to_string(v) + " has invalid parent " + std::to_string(p));
    }
    tree.next_sibling_[v] = tree.first_child_[p];
    tree.first_child_[p] = static_cast<NodeId>(v);
  }
  if (tree.root_ == kNoNode) throw std::invalid_argument("tree has no root");
  tree.parent_ = std::move(parents);

  // Walk the tree once to record its DFS order. Every node must be
  // reachable from the root; a cycle would not be.
  tree.preorder_.reserve(n);
  tree.ascents_.assign(n, 0);
  NodeId v = tree.root_;
  tree.preorder_.push_back(v);
  bool descend = true;
  while (true) {
    if (descend && tree.first_child_[v] != kNoNode) {
      v = tree.first_child_[v];
      tree.preorder_.push_back(v);
      continue;
    }
    if (v == tree.root_) break;
    ++tree.ascents_[tree.preorder_.size() - 1];
    if (tree.next_sibling_[v] != kNoNode) {
      v = tree.next_sibling_[v];
      tree.preorder_.push_back(v);
      descend = true;
    } else {
      v = tree.parent_[v];
      descend = false;
    }
  }
  if (tree.preorder_.size() != n) throw std::invalid_argument("parent array contains a cycle");

  tree.rank_.resize(n);
  tree.label_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    tree.rank_[tree.preorder_[r]] = static_cast<NodeId>(r);
    tree.label_[r] = tree.preorder_[r];
  }
  return tree;
}

}  // namespace rmqbatch
