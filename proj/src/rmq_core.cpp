#include "rmqbatch/rmq_core.hpp"

#include "rmqbatch/contraction.hpp"

namespace rmqbatch {

void validate_queries(std::size_t n, std::span<const Query> queries) {
  for (std::size_t t = 0; t < queries.size(); ++t) {
    const Query& q = queries[t];
    if (q.i > q.j) {
      throw QueryError(t, "i=" + std::to_string(q.i) + " exceeds j=" + std::to_string(q.j));
    }
    if (q.j >= n) {
      throw QueryError(t, "j=" + std::to_string(q.j) + " out of range for n=" + std::to_string(n));
    }
  }
}

AnswerSet bf_rmq(std::span<const Value> a, std::span<const Query> queries) {
  validate_queries(a.size(), queries);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    answers[t] = scan_argmin(a, queries[t].i, queries[t].j);
  }
  return answers;
}

AnswerSet bf_rmq_con(std::span<Value> a, std::span<const Query> queries,
                     const ContractOptions& options) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  ContractionScope scope(a, queries, options);
  const ContractedArray& c = scope.contracted();
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    answers[t] = c.f[scan_argmin(c.a_q, c.remapped[t].i, c.remapped[t].j)];
  }
  return answers;
}

}  // namespace rmqbatch
