#include "rmqbatch/sparse_table.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rmqbatch/contraction.hpp"

namespace rmqbatch {

SparseTable::SparseTable(std::span<const Value> values) : values_(values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("sparse table over empty array");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("array too large for sparse table");

  table_.reserve(floor_log2(n) + 1);
  table_.emplace_back(n);
  std::iota(table_[0].begin(), table_[0].end(), std::uint32_t{0});
  for (std::size_t half = 1; 2 * half <= n; half *= 2) {
    const std::vector<std::uint32_t>& prev = table_.back();
    std::vector<std::uint32_t> row(n - 2 * half + 1);
    for (std::size_t m = 0; m < row.size(); ++m) {
      const std::uint32_t left = prev[m];
      const std::uint32_t right = prev[m + half];
      row[m] = values_[right] < values_[left] ? right : left;
    }
    table_.push_back(std::move(row));
  }
}

std::size_t SparseTable::query(std::size_t i, std::size_t j) const {
  if (i > j || j >= size()) {
    throw std::out_of_range("sparse table query (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return query_unchecked(i, j);
}

AnswerSet st_rmq(std::span<const Value> a, std::span<const Query> queries) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  const SparseTable table(a);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    answers[t] = table.query_unchecked(queries[t].i, queries[t].j);
  }
  return answers;
}

QueryBuckets::QueryBuckets(std::span<const Query> queries) {
  // 64 possible buckets; counts[k + 1] accumulates bucket k.
  std::size_t counts[65] = {};
  std::size_t top = 0;
  for (const Query& q : queries) {
    if (q.i == q.j) continue;
    const unsigned k = floor_log2(q.j - q.i);
    ++counts[k + 1];
    top = std::max<std::size_t>(top, k + 1);
  }
  offsets_.assign(counts, counts + top + 1);
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  ordinals_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t t = 0; t < queries.size(); ++t) {
    const Query& q = queries[t];
    if (q.i == q.j) continue;
    ordinals_[cursor[floor_log2(q.j - q.i)]++] = static_cast<std::uint32_t>(t);
  }
}

DoublingArray::DoublingArray(std::span<const Value> values) : d_(values.size()) {
  for (std::size_t m = 0; m < values.size(); ++m) d_[m] = {values[m], static_cast<std::uint32_t>(m)};
}

void DoublingArray::double_up() {
  const std::size_t step = std::size_t{1} << level_;
  // Ascending m reads d_[m + step] before it is overwritten.
  for (std::size_t m = 0; m + step < d_.size(); ++m) d_[m] = std::min(d_[m], d_[m + step]);
  ++level_;
}

std::vector<std::uint32_t> doubling_rmq(std::span<const Value> values, std::span<const Query> queries) {
  std::vector<std::uint32_t> answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    if (queries[t].i == queries[t].j) answers[t] = static_cast<std::uint32_t>(queries[t].i);
  }
  const QueryBuckets buckets(queries);
  if (buckets.count() == 0) return answers;

  DoublingArray d(values);
  for (std::size_t k = 0; k < buckets.count(); ++k) {
    for (const std::uint32_t t : buckets.bucket(k)) answers[t] = d.query(queries[t].i, queries[t].j);
    if (k + 1 < buckets.count()) d.double_up();
  }
  return answers;
}

AnswerSet st_rmq_con(std::span<Value> a, std::span<const Query> queries, const ContractOptions& options) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  ContractionScope scope(a, queries, options);
  const ContractedArray& c = scope.contracted();
  const std::vector<std::uint32_t> positions = doubling_rmq(c.a_q, c.remapped);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    answers[t] = queries[t].i == queries[t].j ? queries[t].i : c.f[positions[t]];
  }
  return answers;
}

}  // namespace rmqbatch
