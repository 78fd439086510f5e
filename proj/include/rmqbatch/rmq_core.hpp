#ifndef RMQBATCH_RMQ_CORE_HPP
#define RMQBATCH_RMQ_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmqbatch {

// Array entries. Marks written during contraction live above the array
// maximum, so every entry must leave room for +2q.
using Value = std::int64_t;

// A query over an array (i <= j, inclusive) or over a tree (two node labels).
struct Query {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

// answers[t] belongs to the t-th query of the originating batch.
using AnswerSet = std::vector<std::size_t>;

class QueryError : public std::invalid_argument {
 public:
  QueryError(std::size_t ordinal, const std::string& what)
      : std::invalid_argument("query #" + std::to_string(ordinal) + ": " + what),
        ordinal_(ordinal) {}

  std::size_t ordinal() const noexcept { return ordinal_; }

 private:
  std::size_t ordinal_;
};

// Thrown when mu + 2q (or n + 2q for trees) would not fit in a word.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Read/write counters filled by instrumented contraction passes.
struct ScanStats {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
};

// Knobs shared by every contraction-based algorithm.
struct ContractOptions {
  // Upper bound on every array entry, known a priori. Skips the max scan.
  std::optional<Value> mu;
  // When set, every access to the caller's array is counted here.
  ScanStats* stats = nullptr;
};

// Throws QueryError for the first query with i > j or j >= n.
void validate_queries(std::size_t n, std::span<const Query> queries);

// Leftmost index of the minimum of a[i..j]; no validation.
inline std::size_t scan_argmin(std::span<const Value> a, std::size_t i, std::size_t j) {
  std::size_t best = i;
  for (std::size_t p = i + 1; p <= j; ++p) {
    if (a[p] < a[best]) best = p;
  }
  return best;
}

// O(qn) linear scan per query.
AnswerSet bf_rmq(std::span<const Value> a, std::span<const Query> queries);

// Contracts a, scans the contracted array per query, maps back, restores a.
AnswerSet bf_rmq_con(std::span<Value> a, std::span<const Query> queries,
                     const ContractOptions& options = {});

}  // namespace rmqbatch

#endif  // RMQBATCH_RMQ_CORE_HPP
