#include "rmqbatch/lca_batch.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rmqbatch/cartesian_offline.hpp"
#include "rmqbatch/online_rmq.hpp"
#include "rmqbatch/sparse_table.hpp"

namespace rmqbatch {
namespace {

void validate_nodes(std::size_t n, std::span<const Query> queries) {
  for (std::size_t t = 0; t < queries.size(); ++t) {
    if (queries[t].i >= n || queries[t].j >= n) {
      throw QueryError(t, "node (" + std::to_string(queries[t].i) + "," + std::to_string(queries[t].j) +
                              ") not in tree of " + std::to_string(n) + " nodes");
    }
  }
}

class LabelScope {
 public:
  LabelScope(LabeledTree& tree, std::span<const Query> queries)
      : tree_(tree), marks_(mark_nodes(tree, queries)) {}
  ~LabelScope() { restore_labels(tree_, marks_); }

  LabelScope(const LabelScope&) = delete;
  LabelScope& operator=(const LabelScope&) = delete;

  const NodeMarks& marks() const { return marks_; }

 private:
  LabeledTree& tree_;
  NodeMarks marks_;
};

// Runs the contraction and hands sorted RMQ pairs over l_q to answer_fn,
// which returns l_q positions.
template <class AnswerFn>
AnswerSet contracted_lca(LabeledTree& tree, std::span<const Query> queries, AnswerFn&& answer_fn) {
  validate_nodes(tree.size(), queries);
  if (queries.empty()) return {};
  EulerContraction euler;
  {
    LabelScope scope(tree, queries);
    euler = euler_contract(tree, queries, scope.marks());
  }
  for (Query& q : euler.remapped) {
    if (q.i > q.j) std::swap(q.i, q.j);
  }
  const auto positions = answer_fn(std::span<const Value>(euler.l_q), std::span<const Query>(euler.remapped));
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) answers[t] = euler.e_q[positions[t]];
  return answers;
}

// A run of the contracted tour still waiting for its entry: the minimum
// level so far and where it was seen. ref = 2r + up names preorder()[r], or
// its parent when up is set.
struct OpenRun {
  static constexpr Value kClosed = std::numeric_limits<Value>::max();
  Value level = kClosed;
  std::size_t ref = 0;
};

Label original_label(const NodeMarks& marks, Label label) {
  return marks.is_mark(label) ? marks.tables.saved[marks.slot_of(label)] : label;
}

[[gnu::noinline]] void close_run(const LabeledTree& tree, const NodeMarks& marks, OpenRun run,
                                 EulerContraction& out) {
  if (run.level == OpenRun::kClosed) return;
  const std::size_t r = run.ref >> 1;
  const NodeId v = tree.preorder()[r];
  const Label label = (run.ref & 1) ? tree.label(tree.parent(v)) : tree.preorder_labels()[r];
  out.e_q.push_back(original_label(marks, label));
  out.l_q.push_back(run.level);
}

// First visit of a marked node: its own entry, and every query endpoint
// naming it now points there.
[[gnu::noinline]] void emit_mark(const NodeMarks& marks, Label label, Value depth, EulerContraction& out) {
  const std::size_t slot = marks.slot_of(label);
  const std::size_t p = out.e_q.size();
  out.e_q.push_back(marks.tables.saved[slot]);
  out.l_q.push_back(depth);
  marks.tables.for_each_ref(slot, [&](std::uint32_t ref) { detail::assign_endpoint(out.remapped, ref, p); });
}

}  // namespace

NodeMarks mark_nodes(LabeledTree& tree, std::span<const Query> queries) {
  const std::size_t n = tree.size();
  const std::size_t q = queries.size();
  if (q == 0) throw std::invalid_argument("mark_nodes needs at least one query");
  detail::check_batch_size(q);
  validate_nodes(n, queries);
  if (n - 1 > std::numeric_limits<Label>::max() - 2 * q) {
    throw OverflowError("tree of " + std::to_string(n) + " nodes leaves no room for " + std::to_string(2 * q) +
                        " marks");
  }

  NodeMarks marks(n, q);
  auto mark = [&](std::size_t node, std::uint32_t ref) {
    const Label label = tree.label(static_cast<NodeId>(node));
    if (!marks.is_mark(label)) {
      ++marks.tables.issued;
      const Label fresh = static_cast<Label>(n - 1 + marks.tables.issued);
      const std::size_t slot = marks.slot_of(fresh);
      marks.tables.saved[slot] = label;
      marks.nodes[slot] = static_cast<NodeId>(node);
      tree.set_label(static_cast<NodeId>(node), fresh);
      marks.tables.link(slot, ref);
    } else {
      marks.tables.link(marks.slot_of(label), ref);
    }
  };
  for (std::size_t t = 0; t < q; ++t) {
    mark(queries[t].i, detail::endpoint_ref(t, false));
    mark(queries[t].j, detail::endpoint_ref(t, true));
  }
  return marks;
}

void restore_labels(LabeledTree& tree, const NodeMarks& marks) {
  for (std::size_t k = 1; k <= marks.tables.issued; ++k) {
    const std::size_t slot = marks.slot_of(static_cast<Label>(marks.tree_size - 1 + k));
    tree.set_label(marks.nodes[slot], marks.tables.saved[slot]);
  }
}

EulerContraction euler_contract(const LabeledTree& tree, std::span<const Query> queries, const NodeMarks& marks) {
  EulerContraction out;
  out.remapped.assign(queries.begin(), queries.end());
  const std::size_t bound = 2 * marks.tables.issued + 1;
  out.e_q.reserve(bound);
  out.l_q.reserve(bound);

  const std::span<const Label> labels = tree.preorder_labels();
  const std::span<const std::uint32_t> ascents = tree.ascents();
  const std::size_t n = labels.size();
  const Label first_mark = marks.tree_size;

  // Step r climbs ascents[r-1] edges, then opens preorder()[r]. A climb of k
  // edges re-visits k nodes, each shallower than the last, so only the final
  // one (the parent of the node opened next) can lower the run. Without a
  // climb the node opened is a first visit: inside an open run it is never
  // lower, otherwise it opens the run. Both cases are one strict compare, so
  // ties keep the first visit. The run state stays in locals; everything
  // done at a marked node is out of line.
  OpenRun run;
  Value depth = 0;
  std::size_t moves = 0;
  if (labels[0] >= first_mark) {
    emit_mark(marks, labels[0], 0, out);
  } else {
    run = {0, 0};
  }
  for (std::size_t r = 1; r < n; ++r) {
    const std::uint32_t climbed = ascents[r - 1];
    const bool up = climbed != 0;
    depth += 1 - static_cast<Value>(climbed);
    moves += climbed + 1;
    const Label label = labels[r];
    if (label >= first_mark) [[unlikely]] {
      if (up && depth - 1 < run.level) run = {depth - 1, 2 * r + 1};
      close_run(tree, marks, run, out);
      emit_mark(marks, label, depth, out);
      run = {};
      continue;
    }
    const Value level = depth - static_cast<Value>(up);
    const bool lower = level < run.level;
    run.level = lower ? level : run.level;
    run.ref = lower ? 2 * r + static_cast<std::size_t>(up) : run.ref;
  }
  // The last climb ends at the root, at position 0.
  if (ascents[n - 1] > 0) {
    moves += ascents[n - 1];
    run = {0, 0};
  }
  close_run(tree, marks, run, out);
  out.edge_moves = moves;
  out.visits = moves + 1;
  return out;
}

AnswerSet st_lca_con(LabeledTree& tree, std::span<const Query> queries) {
  return contracted_lca(tree, queries, [](std::span<const Value> levels, std::span<const Query> pairs) {
    return doubling_rmq(levels, pairs);
  });
}

AnswerSet on_lca_con(LabeledTree& tree, std::span<const Query> queries) {
  return contracted_lca(tree, queries, [](std::span<const Value> levels, std::span<const Query> pairs) {
    const BlockRmq rmq(levels);
    std::vector<std::size_t> positions(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) positions[t] = rmq.query_unchecked(pairs[t].i, pairs[t].j);
    return positions;
  });
}

AnswerSet off_lca(const LabeledTree& tree, std::span<const Query> queries) { return offline_lca(tree, queries); }

AnswerSet lca_batch(LabeledTree& tree, std::span<const Query> queries, const LcaOptions& options) {
  if (static_cast<double>(queries.size()) >= options.fallback_ratio * static_cast<double>(tree.size())) {
    return off_lca(tree, queries);
  }
  return options.engine == LcaEngine::kOnline ? on_lca_con(tree, queries) : st_lca_con(tree, queries);
}

}  // namespace rmqbatch
