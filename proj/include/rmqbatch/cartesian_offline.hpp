#ifndef RMQBATCH_CARTESIAN_OFFLINE_HPP
#define RMQBATCH_CARTESIAN_OFFLINE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rmqbatch/rmq_core.hpp"
#include "rmqbatch/tree.hpp"

namespace rmqbatch {

// Cartesian tree indexed by array position. The root of every subrange is
// its leftmost minimum; kNoNode marks a missing child or the root's parent.
struct CartesianTree {
  NodeId root = kNoNode;
  std::vector<NodeId> left;
  std::vector<NodeId> right;
  std::vector<NodeId> parent;

  std::size_t size() const { return parent.size(); }
};

// Linear-time stack construction.
CartesianTree cartesian_build(std::span<const Value> a);

// The same tree as a LabeledTree (left child before right child).
LabeledTree to_labeled_tree(const CartesianTree& tree);

// Tarjan's offline LCA: one traversal, union by rank with path compression.
// Query pairs are node ids; answers are node ids in query order.
// Throws QueryError for an unknown node.
AnswerSet offline_lca(const LabeledTree& tree, std::span<const Query> queries);

AnswerSet off_rmq(std::span<const Value> a, std::span<const Query> queries);

// Contract, Cartesian tree of a_q, offline LCA, map through f, restore.
AnswerSet off_rmq_con(std::span<Value> a, std::span<const Query> queries,
                      const ContractOptions& options = {});

}  // namespace rmqbatch

#endif  // RMQBATCH_CARTESIAN_OFFLINE_HPP
