#include "rmqbatch/online_rmq.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "rmqbatch/contraction.hpp"

namespace rmqbatch {
namespace {

constexpr std::size_t kB = BlockRmq::kBlock;
constexpr std::uint16_t kNoTable = std::numeric_limits<std::uint16_t>::max();

// Ballot numbers: C[0][0] = 1, C[p][q] = C[p][q-1] + C[p-1][q] for
// 0 <= p <= q != 0, zero elsewhere. C[kB][kB] is Catalan(kB).
using BallotTable = std::array<std::array<std::uint32_t, kB + 1>, kB + 1>;

constexpr BallotTable make_ballot_table() {
  BallotTable c{};
  for (std::size_t q = 0; q <= kB; ++q) {
    for (std::size_t p = 0; p <= q; ++p) {
      if (p == 0 && q == 0) {
        c[p][q] = 1;
        continue;
      }
      c[p][q] = (q > 0 && p <= q - 1 ? c[p][q - 1] : 0) + (p > 0 ? c[p - 1][q] : 0);
    }
  }
  return c;
}

constexpr BallotTable kBallot = make_ballot_table();
static_assert(kBallot[kB][kB] == BlockRmq::kShapes);

}  // namespace

std::uint16_t cartesian_number(std::span<const Value> block) {
  // stack holds the right spine of the partial Cartesian tree; "remaining"
  // counts pops still available, as in the ballot-sequence enumeration.
  std::array<Value, kB> stack{};
  std::size_t top = 0;
  std::size_t remaining = kB;
  std::uint32_t number = 0;
  for (std::size_t i = 0; i < kB; ++i) {
    if (i < block.size()) {
      const Value v = block[i];
      while (top > 0 && stack[top - 1] > v) {
        number += kBallot[kB - 1 - i][remaining];
        --remaining;
        --top;
      }
      stack[top++] = v;
    } else {
      stack[top++] = std::numeric_limits<Value>::max();
    }
  }
  return static_cast<std::uint16_t>(number);
}

BlockRmq::BlockRmq(std::span<const Value> values) : values_(values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("block RMQ over empty array");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("array too large for block RMQ");

  const std::size_t nblocks = (n + kB - 1) / kB;
  signature_.resize(nblocks);
  shape_table_.assign(kShapes, kNoTable);
  block_min_.resize(nblocks);
  block_argmin_.resize(nblocks);

  std::array<Value, kB> padded{};
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t begin = b * kB;
    const std::span<const Value> block = values.subspan(begin, std::min(kB, n - begin));

    std::size_t best = 0;
    for (std::size_t k = 1; k < block.size(); ++k) {
      if (block[k] < block[best]) best = k;
    }
    block_min_[b] = block[best];
    block_argmin_[b] = static_cast<std::uint32_t>(begin + best);

    const std::uint16_t sig = cartesian_number(block);
    signature_[b] = sig;
    if (shape_table_[sig] != kNoTable) continue;

    shape_table_[sig] = static_cast<std::uint16_t>(tables_.size() / kTableEntries);
    for (std::size_t k = 0; k < kB; ++k) {
      padded[k] = k < block.size() ? block[k] : std::numeric_limits<Value>::max();
    }
    for (std::size_t lo = 0; lo < kB; ++lo) {
      std::size_t arg = lo;
      for (std::size_t hi = lo; hi < kB; ++hi) {
        if (padded[hi] < padded[arg]) arg = hi;
        tables_.push_back(static_cast<std::uint8_t>(arg));
      }
    }
  }
  top_.emplace(block_min_);
}

std::size_t BlockRmq::query(std::size_t i, std::size_t j) const {
  if (i > j || j >= size()) {
    throw std::out_of_range("block RMQ query (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return query_unchecked(i, j);
}

std::size_t BlockRmq::query_unchecked(std::size_t i, std::size_t j) const {
  const std::size_t bi = i / kB;
  const std::size_t bj = j / kB;
  if (bi == bj) return in_block(bi, i % kB, j % kB);

  std::size_t best = in_block(bi, i % kB, kB - 1);
  if (bj > bi + 1) {
    const std::size_t mid = block_argmin_[top_->query_unchecked(bi + 1, bj - 1)];
    if (values_[mid] < values_[best]) best = mid;
  }
  const std::size_t right = in_block(bj, 0, j % kB);
  if (values_[right] < values_[best]) best = right;
  return best;
}

AnswerSet on_rmq(std::span<const Value> a, std::span<const Query> queries) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  const BlockRmq rmq(a);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) answers[t] = rmq.query_unchecked(queries[t].i, queries[t].j);
  return answers;
}

AnswerSet on_rmq_con(std::span<Value> a, std::span<const Query> queries, const ContractOptions& options) {
  validate_queries(a.size(), queries);
  if (queries.empty()) return {};
  ContractionScope scope(a, queries, options);
  const ContractedArray& c = scope.contracted();
  const BlockRmq rmq(c.a_q);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    answers[t] = c.f[rmq.query_unchecked(c.remapped[t].i, c.remapped[t].j)];
  }
  return answers;
}

}  // namespace rmqbatch
