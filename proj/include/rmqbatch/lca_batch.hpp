#ifndef RMQBATCH_LCA_BATCH_HPP
#define RMQBATCH_LCA_BATCH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmqbatch/detail/mark_tables.hpp"
#include "rmqbatch/rmq_core.hpp"
#include "rmqbatch/tree.hpp"

namespace rmqbatch {

// Z0/Z1 over node labels. Mark k (k = 1..issued) is label n-1+k and lives
// in slot (n-1+k) mod 2q; nodes[slot] remembers which node carries it.
struct NodeMarks {
  explicit NodeMarks(std::size_t n, std::size_t q) : tables(q), nodes(2 * q, kNoNode), tree_size(n) {}

  std::size_t slot_of(Label label) const { return static_cast<std::size_t>(label % tables.slots()); }
  bool is_mark(Label label) const { return label >= tree_size; }

  detail::MarkTables<Label> tables;
  std::vector<NodeId> nodes;
  std::size_t tree_size;
};

// Rewrites the label of every distinct query node to n-1+k. Throws
// QueryError for unknown nodes, std::invalid_argument for an empty batch and
// OverflowError when n + 2q does not fit; nothing is written in those cases.
NodeMarks mark_nodes(LabeledTree& tree, std::span<const Query> queries);

// Puts back every label rewritten by mark_nodes.
void restore_labels(LabeledTree& tree, const NodeMarks& marks);

// The contracted Euler tour of a marked tree.
struct EulerContraction {
  // Node labels and their depths (root depth 0).
  std::vector<Label> e_q;
  std::vector<Value> l_q;
  // remapped[t] = positions of the first occurrences of the t-th query's
  // nodes, in the query's own order (not sorted).
  std::vector<Query> remapped;
  // Traversal accounting: parent->child plus child->parent moves.
  std::uint64_t edge_moves = 0;
  std::uint64_t visits = 0;
};

// One Euler tour, walked over the tree's stored DFS order, with O(1) state
// beyond the outputs and the depth kept on the fly. The first visit of a
// marked node emits that node; every other maximal run of visitations
// (unmarked nodes and re-visits of marked nodes) emits its shallowest
// visitation, the earliest one on ties.
EulerContraction euler_contract(const LabeledTree& tree, std::span<const Query> queries, const NodeMarks& marks);

// LCA batches over node ids; answers are node ids in query order.
AnswerSet st_lca_con(LabeledTree& tree, std::span<const Query> queries);
AnswerSet on_lca_con(LabeledTree& tree, std::span<const Query> queries);
AnswerSet off_lca(const LabeledTree& tree, std::span<const Query> queries);

enum class LcaEngine { kSparseTable, kOnline };

struct LcaOptions {
  LcaEngine engine = LcaEngine::kSparseTable;
  // Batches with q >= fallback_ratio * n go straight to off_lca.
  double fallback_ratio = 0.25;
};

AnswerSet lca_batch(LabeledTree& tree, std::span<const Query> queries, const LcaOptions& options = {});

}  // namespace rmqbatch

#endif  // RMQBATCH_LCA_BATCH_HPP
