#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rmqbatch/bench.hpp"
#include "rmqbatch/lca_batch.hpp"

using namespace rmqbatch;
using namespace rmqbatch::testing;

namespace {

bool labels_at_rest(const LabeledTree& tree) {
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (tree.label(static_cast<NodeId>(v)) != v) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lca_batch") {
  TEST_CASE("trees keep their DFS order in balanced-parentheses form") {
    // 0 -> {1, 3}, 1 -> 2; Euler tour 0 1 2 1 0 3 0.
    const LabeledTree tree = LabeledTree::from_parents({kNoNode, 0, 1, 0});
    CHECK(std::vector<NodeId>(tree.preorder().begin(), tree.preorder().end()) == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(std::vector<std::uint32_t>(tree.ascents().begin(), tree.ascents().end()) ==
          std::vector<std::uint32_t>{0, 0, 2, 1});
    CHECK(tree.rank(3) == 3);

    Gen gen(31);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = gen.uniform(1, 500);
      const auto parents = gen.tree(n);
      const LabeledTree t = LabeledTree::from_parents(parents);
      std::size_t climbed = 0;
      std::size_t depth = 0;
      for (std::size_t r = 0; r < n; ++r) {
        const NodeId v = t.preorder()[r];
        REQUIRE(t.rank(v) == r);
        REQUIRE(t.preorder_labels()[r] == v);
        if (r > 0) {
          depth = depth + 1 - t.ascents()[r - 1];
          REQUIRE(parents[v] != kNoNode);
          REQUIRE(t.rank(parents[v]) < r);
        }
        REQUIRE(depth == oracle_depth(parents, v));
        climbed += t.ascents()[r];
      }
      REQUIRE(climbed == n - 1);
    }
  }

  TEST_CASE("mark_nodes rewrites query nodes to n-1+k") {
    std::vector<NodeId> parents(10, 0);
    parents[0] = kNoNode;
    LabeledTree tree = LabeledTree::from_parents(parents);

    const std::vector<Query> q{{3, 7}};
    const NodeMarks marks = mark_nodes(tree, q);
    CHECK(tree.label(3) == 10);
    CHECK(tree.label(7) == 11);
    CHECK(marks.tables.issued == 2);
    restore_labels(tree, marks);
    CHECK(labels_at_rest(tree));

    const std::vector<Query> same{{5, 5}};
    const NodeMarks once = mark_nodes(tree, same);
    CHECK(once.tables.issued == 1);
    restore_labels(tree, once);

    const std::vector<Query> shared{{1, 2}, {2, 3}};
    const NodeMarks three = mark_nodes(tree, shared);
    CHECK(three.tables.issued == 3);
    restore_labels(tree, three);
    CHECK(labels_at_rest(tree));

    CHECK_THROWS_AS(mark_nodes(tree, std::span<const Query>{}), std::invalid_argument);
    const std::vector<Query> unknown{{1, 10}};
    CHECK_THROWS_AS(mark_nodes(tree, unknown), QueryError);
    CHECK(labels_at_rest(tree));
  }

  TEST_CASE("euler_contract on a path keeps the leading and trailing runs") {
    LabeledTree path = LabeledTree::from_parents({kNoNode, 0, 1});
    const std::vector<Query> q{{1, 2}};
    const NodeMarks marks = mark_nodes(path, q);
    const EulerContraction e = euler_contract(path, q, marks);
    restore_labels(path, marks);
    CHECK(e.e_q == std::vector<Label>{0, 1, 2, 0});
    CHECK(e.l_q == std::vector<Value>{0, 1, 2, 0});
    CHECK(e.remapped == std::vector<Query>{{1, 2}});
    CHECK(e.edge_moves == 4);
    CHECK(e.visits == 5);
  }

  TEST_CASE("euler_contract on a star folds root re-visits into runs") {
    LabeledTree star = LabeledTree::from_parents({kNoNode, 0, 0, 0});
    const std::vector<Query> q{{1, 2}};
    const NodeMarks marks = mark_nodes(star, q);
    const EulerContraction e = euler_contract(star, q, marks);
    restore_labels(star, marks);
    CHECK(e.e_q == std::vector<Label>{0, 1, 0, 2, 0});
    CHECK(e.l_q == std::vector<Value>{0, 1, 0, 1, 0});
    CHECK(e.remapped == std::vector<Query>{{1, 3}});
    CHECK(st_lca_con(star, q) == AnswerSet{0});
  }

  TEST_CASE("a marked node that is also another pair's LCA") {
    // 0 -> 1 -> {2, 3}; query (2,3) has LCA 1, which is itself queried.
    LabeledTree tree = LabeledTree::from_parents({kNoNode, 0, 1, 1});
    const std::vector<Query> q{{2, 3}, {1, 1}, {3, 2}};
    CHECK(st_lca_con(tree, q) == AnswerSet{1, 1, 1});
    CHECK(on_lca_con(tree, q) == AnswerSet{1, 1, 1});
    CHECK(labels_at_rest(tree));
  }

  TEST_CASE("small answers") {
    LabeledTree path = LabeledTree::from_parents({kNoNode, 0, 1});
    const std::vector<Query> q{{1, 2}, {2, 2}, {0, 2}};
    CHECK(st_lca_con(path, q) == AnswerSet{1, 2, 0});
    CHECK(on_lca_con(path, q) == AnswerSet{1, 2, 0});
    CHECK(off_lca(path, q) == AnswerSet{1, 2, 0});
    LabeledTree single = LabeledTree::from_parents({kNoNode});
    const std::vector<Query> self{{0, 0}};
    CHECK(st_lca_con(single, self) == AnswerSet{0});
    CHECK(st_lca_con(path, std::span<const Query>{}).empty());
  }

  TEST_CASE("property: all LCA variants agree with the oracle, bounds hold, labels restored") {
    Gen gen(37);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = gen.uniform(1, 1000);
      const auto parents = gen.tree(n);
      LabeledTree tree = LabeledTree::from_parents(parents);
      const auto q = gen.node_pairs(n, gen.uniform(1, 30));
      const AnswerSet expected = oracle_lca_batch(parents, q);

      const NodeMarks marks = mark_nodes(tree, q);
      const EulerContraction e = euler_contract(tree, q, marks);
      restore_labels(tree, marks);
      REQUIRE(labels_at_rest(tree));
      REQUIRE(e.e_q.size() == e.l_q.size());
      REQUIRE(e.e_q.size() <= 4 * q.size() + 1);
      REQUIRE(e.edge_moves == 2 * (n - 1));
      for (std::size_t t = 0; t < q.size(); ++t) {
        REQUIRE(e.e_q[e.remapped[t].i] == q[t].i);
        REQUIRE(e.e_q[e.remapped[t].j] == q[t].j);
        REQUIRE(static_cast<std::size_t>(e.l_q[e.remapped[t].i]) == oracle_depth(parents, q[t].i));
      }
      for (std::size_t p = 0; p < e.e_q.size(); ++p) {
        REQUIRE(static_cast<std::size_t>(e.l_q[p]) == oracle_depth(parents, e.e_q[p]));
      }

      REQUIRE(st_lca_con(tree, q) == expected);
      REQUIRE(labels_at_rest(tree));
      REQUIRE(on_lca_con(tree, q) == expected);
      REQUIRE(labels_at_rest(tree));
      REQUIRE(off_lca(tree, q) == expected);
    }
  }

  TEST_CASE("larger Cartesian-shaped trees") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto parents = bench::gen_tree_parents(10000, seed);
      LabeledTree tree = LabeledTree::from_parents(parents);
      Gen gen(seed);
      const auto q = gen.node_pairs(10000, 100);
      const AnswerSet expected = oracle_lca_batch(parents, q);
      REQUIRE(st_lca_con(tree, q) == expected);
      REQUIRE(on_lca_con(tree, q) == expected);
      REQUIRE(labels_at_rest(tree));
    }
  }

  TEST_CASE("lca_batch falls back to off_lca for large batches") {
    const auto parents = bench::gen_tree_parents(400, 5);
    LabeledTree tree = LabeledTree::from_parents(parents);
    Gen gen(41);
    const auto small = gen.node_pairs(400, 20);
    const auto large = gen.node_pairs(400, 150);
    CHECK(lca_batch(tree, small) == oracle_lca_batch(parents, small));
    CHECK(lca_batch(tree, small, {.engine = LcaEngine::kOnline}) == oracle_lca_batch(parents, small));
    CHECK(lca_batch(tree, large) == oracle_lca_batch(parents, large));
    CHECK(labels_at_rest(tree));
  }
}
