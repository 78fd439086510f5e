#include "rmqbatch/cartesian_offline.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rmqbatch/contraction.hpp"
#include "rmqbatch/detail/mark_tables.hpp"

namespace rmqbatch {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<NodeId>(v);
  }

  NodeId find(NodeId v) {
    NodeId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      const NodeId next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  // Returns the representative of the merged set.
  NodeId unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint8_t> rank_;
};

void validate_nodes(std::size_t n, std::span<const Query> queries) {
  for (std::size_t t = 0; t < queries.size(); ++t) {
    if (queries[t].i >= n || queries[t].j >= n) {
      throw QueryError(t, "node (" + std::to_string(queries[t].i) + "," + std::to_string(queries[t].j) +
                              ") not in tree of " + std::to_string(n) + " nodes");
    }
  }
}

}  // namespace

CartesianTree cartesian_build(std::span<const Value> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("Cartesian tree of empty array");
  if (n >= kNoNode) throw std::length_error("array too large for Cartesian tree");

  CartesianTree tree;
  tree.left.assign(n, kNoNode);
  tree.right.assign(n, kNoNode);
  tree.parent.assign(n, kNoNode);
  // The right spine, bottom at the back.
  std::vector<NodeId> spine;
  for (NodeId i = 0; i < n; ++i) {
    NodeId last = kNoNode;
    while (!spine.empty() && a[spine.back()] > a[i]) {
      last = spine.back();
      spine.pop_back();
    }
    if (last != kNoNode) {
      tree.left[i] = last;
      tree.parent[last] = i;
    }
    if (!spine.empty()) {
      tree.right[spine.back()] = i;
      tree.parent[i] = spine.back();
    }
    spine.push_back(i);
  }
  tree.root = spine.front();
  return tree;
}

LabeledTree to_labeled_tree(const CartesianTree& tree) { return LabeledTree::from_parents(tree.parent); }

AnswerSet offline_lca(const LabeledTree& tree, std::span<const Query> queries) {
  const std::size_t n = tree.size();
  validate_nodes(n, queries);
  detail::check_batch_size(queries.size());
  AnswerSet answers(queries.size());
  if (queries.empty()) return answers;

  // Per-node query lists in CSR form; entry = endpoint ref (2t + side).
  std::vector<std::uint32_t> start(n + 1, 0);
  for (const Query& q : queries) {
    ++start[q.i + 1];
    ++start[q.j + 1];
  }
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::uint32_t> refs(2 * queries.size());
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (std::size_t t = 0; t < queries.size(); ++t) {
      refs[cursor[queries[t].i]++] = detail::endpoint_ref(t, false);
      refs[cursor[queries[t].j]++] = detail::endpoint_ref(t, true);
    }
  }

  DisjointSets sets(n);
  std::vector<NodeId> ancestor(n);
  std::vector<std::uint8_t> finished(n, 0);

  auto finish = [&](NodeId v) {
    finished[v] = 1;
    ancestor[sets.find(v)] = v;
    for (std::uint32_t e = start[v]; e < start[v + 1]; ++e) {
      const std::uint32_t ref = refs[e];
      const Query& q = queries[ref >> 1];
      const std::size_t other = (ref & 1U) ? q.i : q.j;
      if (finished[other]) answers[ref >> 1] = ancestor[sets.find(static_cast<NodeId>(other))];
    }
  };

  // Walk the Euler tour in DFS order: open a node, then finish every node
  // left on the climb that follows it.
  const std::span<const NodeId> order = tree.preorder();
  const std::span<const std::uint32_t> ascents = tree.ascents();
  for (std::size_t r = 0; r < n; ++r) {
    NodeId v = order[r];
    ancestor[v] = v;
    for (std::uint32_t k = 0; k < ascents[r]; ++k) {
      finish(v);
      const NodeId p = tree.parent(v);
      ancestor[sets.unite(p, v)] = p;
      v = p;
    }
  }
  finish(tree.root());
  return answers;
}

AnswerSet off_rmq(std::span<const Value> a, std::span<const Query> queries) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  return offline_lca(to_labeled_tree(cartesian_build(a)), queries);
}

AnswerSet off_rmq_con(std::span<Value> a, std::span<const Query> queries, const ContractOptions& options) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  ContractionScope scope(a, queries, options);
  const ContractedArray& c = scope.contracted();
  AnswerSet answers = offline_lca(to_labeled_tree(cartesian_build(c.a_q)), c.remapped);
  for (std::size_t& p : answers) p = c.f[p];
  return answers;
}

}  // namespace rmqbatch
