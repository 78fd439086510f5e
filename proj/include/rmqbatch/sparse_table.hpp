#ifndef RMQBATCH_SPARSE_TABLE_HPP
#define RMQBATCH_SPARSE_TABLE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rmqbatch/rmq_core.hpp"

namespace rmqbatch {

inline unsigned floor_log2(std::size_t x) { return static_cast<unsigned>(std::bit_width(x)) - 1; }

/*
 * Classic sparse table: level k holds the leftmost argmin of every window
 * A[m..m+2^k-1]. O(n log n) words, O(1) query. Keeps a view of the values;
 * the caller owns them and must keep them alive and unchanged.
 */
class SparseTable {
 public:
  explicit SparseTable(std::span<const Value> values);

  std::size_t size() const { return values_.size(); }
  std::size_t levels() const { return table_.size(); }
  std::span<const std::uint32_t> level(std::size_t k) const { return table_[k]; }

  // Leftmost argmin of values[i..j]; throws std::out_of_range.
  std::size_t query(std::size_t i, std::size_t j) const;
  // Same, without range checks.
  std::size_t query_unchecked(std::size_t i, std::size_t j) const {
    if (i == j) return i;
    const unsigned k = floor_log2(j - i);
    const std::uint32_t left = table_[k][i];
    const std::uint32_t right = table_[k][j - (std::size_t{1} << k) + 1];
    return values_[right] < values_[left] ? right : left;
  }

 private:
  std::span<const Value> values_;
  std::vector<std::vector<std::uint32_t>> table_;
};

AnswerSet st_rmq(std::span<const Value> a, std::span<const Query> queries);

// Queries with i != j grouped by floor(log2(j - i)). Counting-sort layout:
// one ordinal array plus bucket offsets, O(q) words.
class QueryBuckets {
 public:
  explicit QueryBuckets(std::span<const Query> queries);

  // t = highest non-empty bucket + 1 (0 when every query has i == j).
  std::size_t count() const { return offsets_.size() - 1; }
  std::span<const std::uint32_t> bucket(std::size_t k) const {
    return std::span(ordinals_).subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
  }

 private:
  std::vector<std::uint32_t> ordinals_;
  std::vector<std::size_t> offsets_;
};

// The single row D of the doubling sweep. At level k, entry m is the
// (value, position) minimum of values[m..min(m+2^k, n)-1], compared
// lexicographically so ties resolve to the leftmost position.
class DoublingArray {
 public:
  using Entry = std::pair<Value, std::uint32_t>;

  explicit DoublingArray(std::span<const Value> values);

  unsigned level() const { return level_; }
  std::size_t size() const { return d_.size(); }
  const Entry& operator[](std::size_t m) const { return d_[m]; }

  // Position of the minimum of values[i..j]; requires 2^level <= j-i+1 <= 2^(level+1).
  std::uint32_t query(std::size_t i, std::size_t j) const {
    const Entry& left = d_[i];
    const Entry& right = d_[j - (std::size_t{1} << level_) + 1];
    return right < left ? right.second : left.second;
  }

  // Level k -> k+1: D[m] = min(D[m], D[m+2^k]) wherever m+2^k is in range.
  void double_up();

 private:
  std::vector<Entry> d_;
  unsigned level_ = 0;
};

// Answers already-contracted queries over values by the bucketed doubling
// sweep: n + O(q log q) time, O(n + q) space where n = values.size().
// Returns positions in values, leftmost on ties.
std::vector<std::uint32_t> doubling_rmq(std::span<const Value> values, std::span<const Query> queries);

// Contract, sweep, map through f, restore.
AnswerSet st_rmq_con(std::span<Value> a, std::span<const Query> queries,
                     const ContractOptions& options = {});

}  // namespace rmqbatch

#endif  // RMQBATCH_SPARSE_TABLE_HPP
