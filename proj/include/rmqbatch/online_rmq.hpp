#ifndef RMQBATCH_ONLINE_RMQ_HPP
#define RMQBATCH_ONLINE_RMQ_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rmqbatch/rmq_core.hpp"
#include "rmqbatch/sparse_table.hpp"

namespace rmqbatch {

/*
 * Block-decomposition RMQ in the Fischer-Heun style.
 *
 * The array is cut into blocks of kBlock entries. Each block gets the
 * Cartesian number of its shape: the rank of the ballot sequence produced by
 * the left-to-right stack simulation (push = 1, pop = 0). Blocks with equal
 * numbers have equal argmins for every in-block range, so one table of
 * kBlock*(kBlock+1)/2 offsets per occurring shape answers all of them.
 * Block minima are covered by a sparse table. A short last block is padded
 * with +infinity, which never pops the stack and is never selected.
 *
 * Keeps a view of the values; the caller keeps them alive and unchanged.
 */
class BlockRmq {
 public:
  static constexpr std::size_t kBlock = 8;
  static constexpr std::size_t kTableEntries = kBlock * (kBlock + 1) / 2;
  // Catalan(kBlock): the number of distinct shapes.
  static constexpr std::size_t kShapes = 1430;

  explicit BlockRmq(std::span<const Value> values);

  BlockRmq(const BlockRmq&) = delete;
  BlockRmq& operator=(const BlockRmq&) = delete;
  BlockRmq(BlockRmq&&) = default;
  BlockRmq& operator=(BlockRmq&&) = default;

  std::size_t size() const { return values_.size(); }
  std::size_t blocks() const { return signature_.size(); }
  std::uint16_t signature(std::size_t block) const { return signature_[block]; }
  // Number of distinct signatures among the blocks (= in-block tables built).
  std::size_t signature_count() const { return tables_.size() / kTableEntries; }

  // Leftmost argmin of values[i..j]; throws std::out_of_range.
  std::size_t query(std::size_t i, std::size_t j) const;
  std::size_t query_unchecked(std::size_t i, std::size_t j) const;

 private:
  std::size_t in_block(std::size_t block, std::size_t lo, std::size_t hi) const {
    const std::size_t table = shape_table_[signature_[block]];
    const std::size_t cell = lo * kBlock - lo * (lo - 1) / 2 + (hi - lo);
    return block * kBlock + tables_[table * kTableEntries + cell];
  }

  std::span<const Value> values_;
  std::vector<std::uint16_t> signature_;
  std::vector<std::uint16_t> shape_table_;
  std::vector<std::uint8_t> tables_;
  std::vector<Value> block_min_;
  std::vector<std::uint32_t> block_argmin_;
  std::optional<SparseTable> top_;
};

// Cartesian number of block (values padded with +infinity past the end).
std::uint16_t cartesian_number(std::span<const Value> block);

AnswerSet on_rmq(std::span<const Value> a, std::span<const Query> queries);

// Contract, BlockRmq over a_q, map through f, restore.
AnswerSet on_rmq_con(std::span<Value> a, std::span<const Query> queries,
                     const ContractOptions& options = {});

}  // namespace rmqbatch

#endif  // RMQBATCH_ONLINE_RMQ_HPP
