#include "rmqbatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "rmqbatch/cartesian_offline.hpp"
#include "rmqbatch/lca_batch.hpp"
#include "rmqbatch/online_rmq.hpp"
#include "rmqbatch/sparse_table.hpp"

namespace rmqbatch::bench {
namespace {

// Decorrelates the streams derived from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class Fn>
std::uint64_t time_ns(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

std::string join_names(std::string_view kind, const auto& registry) {
  std::string names;
  for (const auto& algo : registry) names += (names.empty() ? "" : ",") + algo.name;
  return "unknown " + std::string(kind) + " algorithm; choose from " + names;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

std::vector<Value> gen_array(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("n must be positive");
  std::mt19937_64 rng(derive_seed(seed, 1));
  std::uniform_int_distribution<Value> dist(0, (Value{1} << 31) - 1);
  std::vector<Value> a(n);
  for (Value& v : a) v = dist(rng);
  return a;
}

std::vector<Query> gen_queries(std::size_t n, std::size_t q, std::uint64_t seed) {
  if (n == 0) throw UsageError("n must be positive");
  if (n > (std::size_t{1} << 32)) throw UsageError("n too large for uniform pair generation");
  std::mt19937_64 rng(derive_seed(seed, 2));
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n + 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, pairs - 1);
  std::vector<Query> out(q);
  for (Query& query : out) {
    // r -> (i, j) with j(j+1)/2 <= r < (j+1)(j+2)/2 and i = r - j(j+1)/2.
    const std::uint64_t r = dist(rng);
    auto j = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(r) + 1.0L) - 1.0L) / 2.0L);
    while (j * (j + 1) / 2 > r) --j;
    while ((j + 1) * (j + 2) / 2 <= r) ++j;
    query = {static_cast<std::size_t>(r - j * (j + 1) / 2), static_cast<std::size_t>(j)};
  }
  return out;
}

std::vector<NodeId> gen_tree_parents(std::size_t n, std::uint64_t seed) {
  const std::vector<Value> a = gen_array(n, seed);
  const CartesianTree tree = cartesian_build(a);
  const NodeId root = tree.root;
  auto relabel = [root](NodeId v) -> NodeId {
    if (v == root) return 0;
    if (v == 0) return root;
    return v;
  };
  std::vector<NodeId> parents(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (tree.parent[v] != kNoNode) parents[relabel(v)] = relabel(tree.parent[v]);
  }
  return parents;
}

LabeledTree gen_tree(std::size_t n, std::uint64_t seed) { return LabeledTree::from_parents(gen_tree_parents(n, seed)); }

std::vector<std::size_t> default_q_schedule(std::size_t n) {
  const auto root = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<std::size_t> schedule;
  for (std::size_t i = 0; i < 8; ++i) schedule.push_back(root << i);
  return schedule;
}

std::uint64_t checksum(const AnswerSet& answers) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::size_t a : answers) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (static_cast<std::uint64_t>(a) >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

const std::vector<RmqAlgorithm>& rmq_algorithms() {
  static const std::vector<RmqAlgorithm> registry = {
      {"bf", false, [](std::span<Value> a, std::span<const Query> q) { return bf_rmq(a, q); }, "BF-RMQ"},
      {"bf-con", true, [](std::span<Value> a, std::span<const Query> q) { return bf_rmq_con(a, q); }, "BF-RMQ_CON"},
      {"st", false, [](std::span<Value> a, std::span<const Query> q) { return st_rmq(a, q); }, "ST-RMQ"},
      {"st-con", true, [](std::span<Value> a, std::span<const Query> q) { return st_rmq_con(a, q); }, "ST-RMQ_CON"},
      {"on", false, [](std::span<Value> a, std::span<const Query> q) { return on_rmq(a, q); }, "ON-RMQ (block-FH)"},
      {"on-con", true, [](std::span<Value> a, std::span<const Query> q) { return on_rmq_con(a, q); }, "ON-RMQ_CON (block-FH)"},
      {"off", false, [](std::span<Value> a, std::span<const Query> q) { return off_rmq(a, q); }, "OFF-RMQ"},
      {"off-con", true, [](std::span<Value> a, std::span<const Query> q) { return off_rmq_con(a, q); }, "OFF-RMQ_CON"},
  };
  return registry;
}

const std::vector<LcaAlgorithm>& lca_algorithms() {
  static const std::vector<LcaAlgorithm> registry = {
      {"off", [](LabeledTree& t, std::span<const Query> q) { return off_lca(t, q); }, "OFF-LCA"},
      {"st-con", [](LabeledTree& t, std::span<const Query> q) { return st_lca_con(t, q); }, "ST-LCA_CON"},
      {"on-con", [](LabeledTree& t, std::span<const Query> q) { return on_lca_con(t, q); }, "ON-LCA_CON (block-FH)"},
  };
  return registry;
}

const RmqAlgorithm& find_rmq_algorithm(std::string_view name) {
  for (const auto& algo : rmq_algorithms()) {
    if (algo.name == name) return algo;
  }
  throw UsageError("'" + std::string(name) + "': " + join_names("RMQ", rmq_algorithms()));
}

const LcaAlgorithm& find_lca_algorithm(std::string_view name) {
  for (const auto& algo : lca_algorithms()) {
    if (algo.name == name) return algo;
  }
  throw UsageError("'" + std::string(name) + "': " + join_names("LCA", lca_algorithms()));
}

namespace {

template <class Algorithm, class Input>
std::vector<BenchRecord> run_cell(Input& input, std::span<const Query> queries,
                                  std::span<const Algorithm* const> algos, const CellInput& cell) {
  if (cell.repetitions == 0) throw UsageError("repetitions must be at least 1");
  std::vector<BenchRecord> records;
  std::string reference_algo;
  std::uint64_t reference = 0;
  for (const Algorithm* entry : algos) {
    const Algorithm& algo = *entry;
    const std::string& name = algo.name;
    for (std::size_t rep = 0; rep < cell.repetitions; ++rep) {
      AnswerSet answers;
      const std::uint64_t ns = time_ns([&] { answers = algo.run(input, queries); });
      const std::uint64_t sum = checksum(answers);
      if (reference_algo.empty()) {
        reference_algo = name;
        reference = sum;
      } else if (sum != reference) {
        throw ChecksumMismatch("answers of '" + name + "' disagree with '" + reference_algo + "' (n=" +
                               std::to_string(cell.n) + ", q=" + std::to_string(queries.size()) +
                               ", seed=" + std::to_string(cell.seed) + ")");
      }
      records.push_back({name, cell.n, queries.size(), cell.seed, rep, ns, sum});
    }
  }
  return records;
}

}  // namespace

std::vector<BenchRecord> run_rmq(std::span<Value> a, std::span<const Query> queries,
                                 std::span<const std::string> algos, const CellInput& cell) {
  std::vector<const RmqAlgorithm*> entries;
  for (const std::string& name : algos) entries.push_back(&find_rmq_algorithm(name));
  return run_cell<RmqAlgorithm>(a, queries, std::span<const RmqAlgorithm* const>(entries), cell);
}

std::vector<BenchRecord> run_rmq(std::span<Value> a, std::span<const Query> queries,
                                 std::span<const RmqAlgorithm> algos, const CellInput& cell) {
  std::vector<const RmqAlgorithm*> entries;
  for (const RmqAlgorithm& algo : algos) entries.push_back(&algo);
  return run_cell<RmqAlgorithm>(a, queries, std::span<const RmqAlgorithm* const>(entries), cell);
}

std::vector<BenchRecord> run_lca(LabeledTree& tree, std::span<const Query> queries,
                                 std::span<const std::string> algos, const CellInput& cell) {
  std::vector<const LcaAlgorithm*> entries;
  for (const std::string& name : algos) entries.push_back(&find_lca_algorithm(name));
  return run_cell<LcaAlgorithm>(tree, queries, std::span<const LcaAlgorithm* const>(entries), cell);
}

void write_csv_header(std::ostream& out) { out << "algo,n,q,seed,rep,elapsed_ns\n"; }

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  for (const BenchRecord& r : records) {
    out << r.algo << ',' << r.n << ',' << r.q << ',' << r.seed << ',' << r.rep << ',' << r.elapsed_ns << '\n';
  }
}

std::uint64_t median_ns(std::span<const BenchRecord> records, std::string_view algo) {
  std::vector<std::uint64_t> times;
  for (const BenchRecord& r : records) {
    if (r.algo == algo) times.push_back(r.elapsed_ns);
  }
  if (times.empty()) throw std::invalid_argument("no records for " + std::string(algo));
  const auto mid = times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2);
  std::nth_element(times.begin(), mid, times.end());
  if (times.size() % 2 == 1) return *mid;
  const std::uint64_t upper = *mid;
  const std::uint64_t lower = *std::max_element(times.begin(), mid);
  return lower + (upper - lower) / 2;
}

AnswerSet naive_lca(const LabeledTree& tree, std::span<const Query> queries) {
  std::vector<std::uint8_t> on_path(tree.size(), 0);
  AnswerSet answers(queries.size());
  for (std::size_t t = 0; t < queries.size(); ++t) {
    for (NodeId v = static_cast<NodeId>(queries[t].i); v != kNoNode; v = tree.parent(v)) on_path[v] = 1;
    NodeId w = static_cast<NodeId>(queries[t].j);
    while (!on_path[w]) w = tree.parent(w);
    answers[t] = w;
    for (NodeId v = static_cast<NodeId>(queries[t].i); v != kNoNode; v = tree.parent(v)) on_path[v] = 0;
  }
  return answers;
}

VerifyReport verify(const VerifyConfig& config) {
  if (config.max_n == 0 || config.max_q == 0) throw UsageError("max-n and max-q must be positive");
  VerifyReport report;
  auto fail = [&](const std::string& kind, std::uint64_t seed, const std::string& algo) {
    report.failures.push_back(kind + " seed=" + std::to_string(seed) + " algo=" + algo);
  };

  for (std::size_t s = 0; s < config.seeds; ++s) {
    const std::uint64_t seed = config.base_seed + s;
    std::mt19937_64 rng(derive_seed(seed, 3));
    auto uniform = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    // RMQ: a narrow value range forces ties; a random offset allows negatives.
    const std::size_t n = uniform(1, config.max_n);
    const std::size_t q = uniform(1, config.max_q);
    const auto range = static_cast<Value>(uniform(1, std::max<std::size_t>(1, n / 4)));
    const Value offset = static_cast<Value>(uniform(0, 2)) - 1;
    std::vector<Value> a(n);
    for (Value& v : a) v = std::uniform_int_distribution<Value>(0, range)(rng) + offset * range;
    std::vector<Query> queries(q);
    for (Query& query : queries) {
      const std::size_t x = uniform(0, n - 1);
      const std::size_t y = uniform(0, n - 1);
      query = {std::min(x, y), std::max(x, y)};
    }
    const std::vector<Value> original = a;
    const AnswerSet expected = bf_rmq(a, queries);
    for (const RmqAlgorithm& algo : rmq_algorithms()) {
      if (algo.run(a, queries) != expected) fail("rmq", seed, algo.name);
      if (a != original) {
        fail("rmq-restore", seed, algo.name);
        a = original;
      }
    }
    ++report.rmq_instances;

    // LCA: alternate uniform random-parent trees and Cartesian trees.
    const std::size_t tn = uniform(1, std::max<std::size_t>(1, config.max_n / 2));
    std::vector<NodeId> parents(tn, kNoNode);
    if (s % 2 == 0) {
      std::vector<NodeId> ids(tn);
      std::iota(ids.begin(), ids.end(), NodeId{0});
      std::shuffle(ids.begin() + 1, ids.end(), rng);
      for (std::size_t v = 1; v < tn; ++v) parents[ids[v]] = ids[uniform(0, v - 1)];
    } else {
      std::vector<Value> values(tn);
      for (Value& v : values) v = static_cast<Value>(uniform(0, 3));
      parents = cartesian_build(values).parent;
    }
    LabeledTree tree = LabeledTree::from_parents(parents);
    std::vector<Query> pairs(uniform(1, std::max<std::size_t>(1, config.max_q / 2)));
    for (Query& p : pairs) p = {uniform(0, tn - 1), uniform(0, tn - 1)};
    const AnswerSet lca_expected = naive_lca(tree, pairs);
    for (const LcaAlgorithm& algo : lca_algorithms()) {
      if (algo.run(tree, pairs) != lca_expected) fail("lca", seed, algo.name);
      for (std::size_t v = 0; v < tn; ++v) {
        if (tree.label(static_cast<NodeId>(v)) != v) {
          fail("lca-restore", seed, algo.name);
          break;
        }
      }
    }
    ++report.lca_instances;
  }
  return report;
}

void write_array(const std::string& path, std::span<const Value> a, bool text) {
  if (text) {
    std::ofstream out = open_out(path);
    for (const Value v : a) out << v << '\n';
    return;
  }
  std::ofstream out = open_out(path, std::ios::binary);
  for (const Value v : a) {
    const auto u = static_cast<std::uint64_t>(v);
    char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((u >> (8 * b)) & 0xffU);
    out.write(bytes, 8);
  }
}

std::vector<Value> read_array(const std::string& path, bool text) {
  std::vector<Value> a;
  if (text) {
    std::ifstream in = open_in(path);
    Value v = 0;
    while (in >> v) a.push_back(v);
    if (!in.eof()) throw std::runtime_error(path + ": malformed value after entry " + std::to_string(a.size()));
  } else {
    std::ifstream in = open_in(path, std::ios::binary);
    char bytes[8];
    while (in.read(bytes, 8)) {
      std::uint64_t u = 0;
      for (int b = 0; b < 8; ++b) u |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[b])) << (8 * b);
      a.push_back(static_cast<Value>(u));
    }
    if (in.gcount() != 0) throw std::runtime_error(path + ": size is not a multiple of 8 bytes");
  }
  if (a.empty()) throw std::runtime_error(path + ": empty array");
  return a;
}

void write_queries(const std::string& path, std::span<const Query> queries) {
  std::ofstream out = open_out(path);
  for (const Query& q : queries) out << q.i << ' ' << q.j << '\n';
}

std::vector<Query> read_queries(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<Query> queries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Query q;
    if (!(fields >> q.i >> q.j)) {
      throw std::runtime_error(path + ": malformed query line " + std::to_string(queries.size() + 1));
    }
    queries.push_back(q);
  }
  return queries;
}

void write_tree(const std::string& path, std::span<const NodeId> parents) {
  std::ofstream out = open_out(path);
  out << parents.size() << '\n';
  for (std::size_t v = 0; v < parents.size(); ++v) {
    if (parents[v] != kNoNode) out << v << ' ' << parents[v] << '\n';
  }
}

std::vector<NodeId> read_tree(const std::string& path) {
  std::ifstream in = open_in(path);
  std::size_t n = 0;
  if (!(in >> n) || n == 0 || n >= kNoNode) throw std::runtime_error(path + ": bad node count");
  std::vector<NodeId> parents(n, kNoNode);
  for (std::size_t line = 0; line + 1 < n; ++line) {
    std::size_t child = 0;
    std::size_t parent = 0;
    if (!(in >> child >> parent)) throw std::runtime_error(path + ": expected " + std::to_string(n - 1) + " edges");
    if (child == 0) throw std::runtime_error(path + ": node 0 is the root and has no parent");
    if (child >= n || parent >= n) throw std::runtime_error(path + ": node id out of range");
    if (parents[child] != kNoNode) throw std::runtime_error(path + ": node " + std::to_string(child) + " has two parents");
    parents[child] = static_cast<NodeId>(parent);
  }
  return parents;
}

}  // namespace rmqbatch::bench
