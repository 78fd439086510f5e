#ifndef RMQBATCH_BENCH_HPP
#define RMQBATCH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rmqbatch/rmq_core.hpp"
#include "rmqbatch/tree.hpp"

namespace rmqbatch::bench {

// Recorded alongside results so runs can be reproduced.
inline constexpr std::string_view kGeneratorId = "std::mt19937_64";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ChecksumMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform values in [0, 2^31).
std::vector<Value> gen_array(std::size_t n, std::uint64_t seed);
// Uniform over the n(n+1)/2 pairs i <= j.
std::vector<Query> gen_queries(std::size_t n, std::size_t q, std::uint64_t seed);
// Parent array of the Cartesian tree of gen_array(n, seed), with the root
// relabelled to node 0 (its old id takes the root's).
std::vector<NodeId> gen_tree_parents(std::size_t n, std::uint64_t seed);
LabeledTree gen_tree(std::size_t n, std::uint64_t seed);

// ceil(sqrt(n)) * 2^i for i = 0..7.
std::vector<std::size_t> default_q_schedule(std::size_t n);

// FNV-1a over the answers.
std::uint64_t checksum(const AnswerSet& answers);

struct RmqAlgorithm {
  std::string name;
  bool contracted = false;
  std::function<AnswerSet(std::span<Value>, std::span<const Query>)> run;
  // Display name for reports.
  std::string label;
};

struct LcaAlgorithm {
  std::string name;
  std::function<AnswerSet(LabeledTree&, std::span<const Query>)> run;
  std::string label;
};

// bf, bf-con, st, st-con, on, on-con, off, off-con.
const std::vector<RmqAlgorithm>& rmq_algorithms();
// off, st-con, on-con.
const std::vector<LcaAlgorithm>& lca_algorithms();
const RmqAlgorithm& find_rmq_algorithm(std::string_view name);
const LcaAlgorithm& find_lca_algorithm(std::string_view name);

struct BenchRecord {
  std::string algo;
  std::size_t n = 0;
  std::size_t q = 0;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t checksum = 0;
};

struct CellInput {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t repetitions = 5;
};

// One (input, batch) cell: every algorithm `repetitions` times, in the
// given order. Throws ChecksumMismatch naming the first two algorithms
// whose answers disagree.
std::vector<BenchRecord> run_rmq(std::span<Value> a, std::span<const Query> queries,
                                 std::span<const std::string> algos, const CellInput& cell);
std::vector<BenchRecord> run_lca(LabeledTree& tree, std::span<const Query> queries,
                                 std::span<const std::string> algos, const CellInput& cell);
// Same, with explicit algorithm entries.
std::vector<BenchRecord> run_rmq(std::span<Value> a, std::span<const Query> queries,
                                 std::span<const RmqAlgorithm> algos, const CellInput& cell);

// Header: algo,n,q,seed,rep,elapsed_ns
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

// Median elapsed time of the records of one algorithm.
std::uint64_t median_ns(std::span<const BenchRecord> records, std::string_view algo);

struct VerifyConfig {
  std::size_t max_n = 4096;
  std::size_t max_q = 128;
  std::size_t seeds = 100;
  std::uint64_t base_seed = 1;
};

struct VerifyReport {
  std::size_t rmq_instances = 0;
  std::size_t lca_instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Cross-checks every RMQ variant against bf_rmq and every LCA variant
// against a parent-walk oracle on random instances with many duplicates.
VerifyReport verify(const VerifyConfig& config);

// Parent-walk LCA, O(depth) per query.
AnswerSet naive_lca(const LabeledTree& tree, std::span<const Query> queries);

// File formats. Arrays: little-endian int64 or one value per line.
// Queries: "i j" per line. Trees: n, then "child parent" for every non-root
// node; the root is node 0.
void write_array(const std::string& path, std::span<const Value> a, bool text);
std::vector<Value> read_array(const std::string& path, bool text);
void write_queries(const std::string& path, std::span<const Query> queries);
std::vector<Query> read_queries(const std::string& path);
void write_tree(const std::string& path, std::span<const NodeId> parents);
std::vector<NodeId> read_tree(const std::string& path);

}  // namespace rmqbatch::bench

#endif  // RMQBATCH_BENCH_HPP
