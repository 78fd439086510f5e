#ifndef RMQBATCH_CONTRACTION_HPP
#define RMQBATCH_CONTRACTION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmqbatch/rmq_core.hpp"

namespace rmqbatch {

// The O(q)-sized stand-in for an array and a query batch.
//
// Every query endpoint is kept verbatim; every maximal run of positions
// holding no endpoint is replaced by its leftmost minimum. f maps contracted
// positions back to original ones and is strictly increasing, so the
// leftmost argmin over a_q[i'..j'] maps to the leftmost argmin over A[i..j].
struct ContractedArray {
  std::vector<Value> a_q;
  std::vector<std::size_t> f;
  // remapped[t] is the t-th query expressed in a_q positions.
  std::vector<Query> remapped;
  Value mu = 0;
  // a_q positions that hold a marked (endpoint) entry, increasing.
  std::vector<std::uint32_t> marked;

  std::size_t size() const { return a_q.size(); }
};

Value find_max(std::span<const Value> a);

// Marks every query endpoint in place (A[p] <- mu + k) and builds the
// contracted array in one further scan. A is left marked; call restore().
//
// Throws QueryError for malformed queries, std::invalid_argument for an empty
// batch, OverflowError when mu + 2q does not fit. All checks happen before
// the first write. A supplied options.mu must be >= every entry of A.
ContractedArray contract(std::span<Value> a, std::span<const Query> queries,
                         const ContractOptions& options = {});

// f(p); throws std::out_of_range.
std::size_t map_answer(const ContractedArray& contracted, std::size_t p);

// Writes A[f(p)] = a_q[p] for every p. Idempotent.
void restore(std::span<Value> a, const ContractedArray& contracted);

// Contracts on construction and restores on destruction, so A is returned
// intact on every exit path.
class ContractionScope {
 public:
  ContractionScope(std::span<Value> a, std::span<const Query> queries,
                   const ContractOptions& options = {})
      : a_(a), contracted_(contract(a, queries, options)) {}
  ~ContractionScope() { restore(a_, contracted_); }

  ContractionScope(const ContractionScope&) = delete;
  ContractionScope& operator=(const ContractionScope&) = delete;

  const ContractedArray& contracted() const { return contracted_; }

 private:
  std::span<Value> a_;
  ContractedArray contracted_;
};

}  // namespace rmqbatch

#endif  // RMQBATCH_CONTRACTION_HPP
