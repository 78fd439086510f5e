#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rmqbatch/cartesian_offline.hpp"

using namespace rmqbatch;
using namespace rmqbatch::testing;

namespace {

void collect_inorder(const CartesianTree& t, NodeId v, std::vector<NodeId>& out) {
  if (v == kNoNode) return;
  collect_inorder(t, t.left[v], out);
  out.push_back(v);
  collect_inorder(t, t.right[v], out);
}

// Root of the subtree spanning [i, j]: the LCA of i and j.
NodeId subrange_root(const CartesianTree& t, std::size_t i, std::size_t j) {
  return static_cast<NodeId>(oracle_lca(t.parent, i, j));
}

}  // namespace

TEST_SUITE("cartesian_offline") {
  TEST_CASE("cartesian_build small shapes") {
    const std::vector<Value> a{2, 1, 3};
    const CartesianTree t = cartesian_build(a);
    CHECK(t.root == 1);
    CHECK(t.left[1] == 0);
    CHECK(t.right[1] == 2);

    const std::vector<Value> ties{1, 1};
    const CartesianTree tt = cartesian_build(ties);
    CHECK(tt.root == 0);
    CHECK(tt.right[0] == 1);
    CHECK(tt.left[0] == kNoNode);

    const std::vector<Value> one{5};
    const CartesianTree t1 = cartesian_build(one);
    CHECK(t1.root == 0);
    CHECK(t1.parent[0] == kNoNode);
  }

  TEST_CASE("every subrange is rooted at its leftmost minimum; in-order is 0..n-1") {
    Gen gen(13);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = gen.uniform(1, 64);
      const auto a = gen.array(n, 0, 4);
      const CartesianTree t = cartesian_build(a);
      std::vector<NodeId> order;
      collect_inorder(t, t.root, order);
      REQUIRE(order.size() == n);
      for (std::size_t v = 0; v < n; ++v) REQUIRE(order[v] == v);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) REQUIRE(subrange_root(t, i, j) == oracle_argmin(a, i, j));
      }
    }
  }

  TEST_CASE("offline_lca small trees") {
    const LabeledTree path = LabeledTree::from_parents({kNoNode, 0, 1});
    const std::vector<Query> q1{{1, 2}, {2, 2}, {2, 0}};
    CHECK(offline_lca(path, q1) == AnswerSet{1, 2, 0});

    const LabeledTree star = LabeledTree::from_parents({kNoNode, 0, 0, 0});
    const std::vector<Query> q2{{1, 2}, {3, 3}};
    CHECK(offline_lca(star, q2) == AnswerSet{0, 3});

    const std::vector<Query> bad{{0, 1}, {0, 4}};
    try {
      offline_lca(star, bad);
      FAIL("expected QueryError");
    } catch (const QueryError& e) {
      CHECK(e.ordinal() == 1);
    }
  }

  TEST_CASE("tree construction rejects malformed parent arrays") {
    CHECK_THROWS_AS(LabeledTree::from_parents({}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::from_parents({kNoNode, kNoNode}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::from_parents({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::from_parents({kNoNode, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::from_parents({kNoNode, 7}), std::invalid_argument);
  }

  TEST_CASE("property: offline_lca equals the parent-walk oracle") {
    Gen gen(17);
    for (int trial = 0; trial < 60; ++trial) {
      const auto parents = gen.tree(200);
      const LabeledTree tree = LabeledTree::from_parents(parents);
      const auto q = gen.node_pairs(200, 50);
      const AnswerSet got = offline_lca(tree, q);
      REQUIRE(got == oracle_lca_batch(parents, q));
      for (std::size_t v = 0; v < 200; ++v) REQUIRE(tree.label(static_cast<NodeId>(v)) == v);
    }
  }

  TEST_CASE("off_rmq and off_rmq_con") {
    std::vector<Value> a = example_array();
    const auto q = example_queries();
    CHECK(off_rmq(a, q) == AnswerSet{10, 6, 10});
    CHECK(off_rmq_con(a, q) == AnswerSet{10, 6, 10});
    CHECK(a == example_array());
    const std::vector<Query> origin{{0, 0}};
    CHECK(off_rmq_con(a, origin) == AnswerSet{0});

    Gen gen(19);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Value> b = gen.array(10000, 0, 50);
      const std::vector<Value> copy = b;
      const auto queries = gen.queries(b.size(), 100);
      const AnswerSet expected = oracle_rmq(b, queries);
      REQUIRE(off_rmq(b, queries) == expected);
      REQUIRE(off_rmq_con(b, queries) == expected);
      REQUIRE(b == copy);
    }
  }
}
