#ifndef RMQBATCH_TREE_HPP
#define RMQBATCH_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace rmqbatch {

using Label = std::uint64_t;
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Rooted tree over nodes 0..n-1 stored as parent / first-child /
// next-sibling arrays, plus a rewritable label per node.
//
// The DFS order is kept as well, in balanced-parentheses form: preorder()[r]
// is the r-th node opened and ascents()[r] the number of edges climbed right
// after it. Labels are stored by preorder rank, so a full Euler tour is two
// sequential scans instead of a chain of dependent pointer loads; access by
// node id goes through rank().
//
// Node v carries label v at rest. Contraction-based LCA algorithms rewrite
// the labels of query nodes for the duration of a call and put them back
// before returning, so queries and answers always speak in node ids.
class LabeledTree {
 public:
  // parents[v] is the parent of v, kNoNode for the single root. Children are
  // ordered by increasing id. Throws std::invalid_argument unless the
  // parents describe one connected rooted tree.
  static LabeledTree from_parents(std::vector<NodeId> parents);

  std::size_t size() const { return parent_.size(); }
  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  NodeId first_child(NodeId v) const { return first_child_[v]; }
  NodeId next_sibling(NodeId v) const { return next_sibling_[v]; }
  std::span<const NodeId> parents() const { return parent_; }
  std::span<const NodeId> preorder() const { return preorder_; }
  std::span<const std::uint32_t> ascents() const { return ascents_; }

  std::size_t rank(NodeId v) const { return rank_[v]; }

  Label label(NodeId v) const { return label_[rank_[v]]; }
  void set_label(NodeId v, Label label) { label_[rank_[v]] = label; }
  // preorder_labels()[r] is the label of preorder()[r].
  std::span<const Label> preorder_labels() const { return label_; }

 private:
  LabeledTree() = default;

  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;
  std::vector<NodeId> first_child_;
  std::vector<NodeId> next_sibling_;
  std::vector<NodeId> preorder_;
  std::vector<std::uint32_t> ascents_;
  std::vector<NodeId> rank_;
  std::vector<Label> label_;
};

}  // namespace rmqbatch

#endif  // RMQBATCH_TREE_HPP
