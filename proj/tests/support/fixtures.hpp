#ifndef RMQBATCH_TESTS_FIXTURES_HPP
#define RMQBATCH_TESTS_FIXTURES_HPP

#include <vector>

#include "rmqbatch/rmq_core.hpp"

namespace rmqbatch::testing {

// Worked example: three queries over a 22-entry array.
inline std::vector<Value> example_array() {
  return {17, 22, 38, 4, 5, 8, 2, 8, 9, 21, 0, 12, 8, 7, 13, 3, 6, 14, 1, 36, 0, 4};
}

inline std::vector<Query> example_queries() { return {{4, 18}, {0, 6}, {6, 10}}; }

}  // namespace rmqbatch::testing

#endif  // RMQBATCH_TESTS_FIXTURES_HPP
