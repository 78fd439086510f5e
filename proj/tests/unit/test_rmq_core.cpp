#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rmqbatch/rmq_core.hpp"

using namespace rmqbatch;
using namespace rmqbatch::testing;

TEST_SUITE("rmq_core") {
  TEST_CASE("bf_rmq answers the worked example") {
    const std::vector<Value> a = example_array();
    const std::vector<Query> q{{4, 18}};
    CHECK(bf_rmq(a, q) == AnswerSet{10});
  }

  TEST_CASE("bf_rmq trivial cases") {
    const std::vector<Value> one{5};
    const std::vector<Query> q0{{0, 0}};
    CHECK(bf_rmq(one, q0) == AnswerSet{0});
    const std::vector<Value> ties{2, 2, 2};
    const std::vector<Query> q1{{0, 2}};
    CHECK(bf_rmq(ties, q1) == AnswerSet{0});
  }

  TEST_CASE("bf_rmq rejects malformed queries by ordinal") {
    const std::vector<Value> a{1, 2, 3};
    const std::vector<Query> reversed{{0, 1}, {2, 1}};
    try {
      bf_rmq(a, reversed);
      FAIL("expected QueryError");
    } catch (const QueryError& e) {
      CHECK(e.ordinal() == 1);
    }
    const std::vector<Query> outside{{0, 3}};
    CHECK_THROWS_AS(bf_rmq(a, outside), QueryError);
  }

  TEST_CASE("bf_rmq_con matches on the worked example and restores") {
    std::vector<Value> a = example_array();
    const std::vector<Query> q = example_queries();
    CHECK(bf_rmq_con(a, q) == AnswerSet{10, 6, 10});
    CHECK(a == example_array());
  }

  TEST_CASE("bf_rmq_con small and empty batches") {
    std::vector<Value> a{3, 1};
    const std::vector<Query> q{{0, 1}};
    CHECK(bf_rmq_con(a, q) == AnswerSet{1});
    std::vector<Value> b = example_array();
    CHECK(bf_rmq_con(b, std::span<const Query>{}).empty());
    CHECK(b == example_array());
  }

  TEST_CASE("property: bf_rmq is pure, leftmost, and equals bf_rmq_con") {
    Gen gen(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = gen.uniform(1, 200);
      std::vector<Value> a = gen.array(n, -3, 3);
      const std::vector<Value> copy = a;
      const auto q = gen.queries(n, gen.uniform(1, 20));
      const AnswerSet expected = bf_rmq(a, q);
      REQUIRE(a == copy);
      REQUIRE(expected == oracle_rmq(a, q));
      for (std::size_t t = 0; t < q.size(); ++t) {
        for (std::size_t p = q[t].i; p < expected[t]; ++p) REQUIRE(a[p] > a[expected[t]]);
      }
      REQUIRE(bf_rmq_con(a, q) == expected);
      REQUIRE(a == copy);
    }
  }
}
