// rmqbatch: data generation, benchmarking and cross-checking for batched
// RMQ / LCA algorithms.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmqbatch/bench.hpp"
#include "rmqbatch/lce.hpp"

namespace {

using rmqbatch::Query;
using rmqbatch::Value;
namespace bench = rmqbatch::bench;

constexpr std::uint64_t kDefaultSeed = 1;

void add_seed(CLI::App* cmd, std::uint64_t& seed) {
  cmd->add_option("--seed", seed, "Generator seed")->envname("RMQBATCH_SEED")->capture_default_str();
}

// --csv "-" writes to stdout.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
    bench::write_csv_header(out());
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <class Find>
void summarize(const std::vector<bench::BenchRecord>& records, const std::vector<std::string>& algos, Find find) {
  if (records.empty()) return;
  std::cerr << "n=" << records.front().n << " q=" << records.front().q << " generator=" << bench::kGeneratorId
            << "\n";
  for (const std::string& algo : algos) {
    std::cerr << "  " << algo << " [" << find(algo).label << "]: median " << bench::median_ns(records, algo)
              << " ns\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batched range-minimum and lowest-common-ancestor queries"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::size_t q = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
  bool text = false;

  auto* gen_array = app.add_subcommand("gen-array", "Random array, uniform in [0, 2^31)");
  gen_array->add_option("--n", n, "Length")->required();
  add_seed(gen_array, seed);
  gen_array->add_option("--out", out_path, "Output file")->required();
  gen_array->add_flag("--text", text, "One value per line instead of little-endian int64");

  auto* gen_queries = app.add_subcommand("gen-queries", "Uniform random (i, j) pairs, i <= j");
  gen_queries->add_option("--n", n, "Array length")->required();
  gen_queries->add_option("--q", q, "Number of queries")->required();
  add_seed(gen_queries, seed);
  gen_queries->add_option("--out", out_path, "Output file")->required();

  auto* gen_tree = app.add_subcommand("gen-tree", "Cartesian tree of a random array, rooted at node 0");
  gen_tree->add_option("--n", n, "Number of nodes")->required();
  add_seed(gen_tree, seed);
  gen_tree->add_option("--out", out_path, "Output file")->required();

  std::vector<std::string> algos;
  std::string array_path;
  std::string queries_path;
  std::string tree_path;
  std::string csv_path = "-";
  std::vector<std::size_t> q_schedule;
  std::size_t reps = 5;

  auto* run = app.add_subcommand("run", "Time RMQ algorithms on one input");
  run->add_option("--algos", algos, "bf,bf-con,st,st-con,on,on-con,off,off-con")->delimiter(',')->required();
  run->add_option("--array", array_path, "Array file (otherwise generated from --n)");
  run->add_flag("--text", text, "Array file is one value per line");
  run->add_option("--queries", queries_path, "Query file (otherwise generated for each --q)");
  run->add_option("--n", n, "Generated array length");
  run->add_option("--q", q_schedule, "Batch sizes for generated queries (default sqrt(n)*2^i, i=0..7)")
      ->delimiter(',');
  add_seed(run, seed);
  run->add_option("--reps", reps, "Repetitions per cell")->capture_default_str();
  run->add_option("--csv", csv_path, "CSV output, - for stdout")->capture_default_str();

  auto* run_lca = app.add_subcommand("run-lca", "Time LCA algorithms on one tree");
  run_lca->add_option("--algos", algos, "off,st-con,on-con")->delimiter(',')->required();
  run_lca->add_option("--tree", tree_path, "Tree file (otherwise generated from --n)");
  run_lca->add_option("--queries", queries_path, "Node-pair file (otherwise generated for each --q)");
  run_lca->add_option("--n", n, "Generated tree size");
  run_lca->add_option("--q", q_schedule, "Batch sizes for generated queries")->delimiter(',');
  add_seed(run_lca, seed);
  run_lca->add_option("--reps", reps, "Repetitions per cell")->capture_default_str();
  run_lca->add_option("--csv", csv_path, "CSV output, - for stdout")->capture_default_str();

  bench::VerifyConfig verify_config;
  auto* verify = app.add_subcommand("verify", "Cross-check every algorithm against the oracles");
  verify->add_option("--max-n", verify_config.max_n)->capture_default_str();
  verify->add_option("--max-q", verify_config.max_q)->capture_default_str();
  verify->add_option("--seeds", verify_config.seeds, "Number of random instances")->capture_default_str();
  add_seed(verify, seed);

  std::string text_path;
  auto* lce = app.add_subcommand("lce", "Longest common extensions of suffix pairs");
  lce->add_option("--text", text_path, "Text file (bytes)")->required();
  lce->add_option("--queries", queries_path, "Position pairs, 'i j' per line")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_array) {
      bench::write_array(out_path, bench::gen_array(n, seed), text);
    } else if (*gen_queries) {
      bench::write_queries(out_path, bench::gen_queries(n, q, seed));
    } else if (*gen_tree) {
      bench::write_tree(out_path, bench::gen_tree_parents(n, seed));
    } else if (*run) {
      for (const std::string& name : algos) bench::find_rmq_algorithm(name);
      std::vector<Value> a = array_path.empty() ? bench::gen_array(n, seed) : bench::read_array(array_path, text);
      CsvSink csv(csv_path);
      const bench::CellInput cell{a.size(), seed, reps};
      auto run_cell = [&](const std::vector<Query>& queries) {
        const auto records = bench::run_rmq(a, queries, algos, cell);
        bench::write_csv(csv.out(), records);
        summarize(records, algos, bench::find_rmq_algorithm);
      };
      if (!queries_path.empty()) {
        run_cell(bench::read_queries(queries_path));
      } else {
        if (q_schedule.empty()) q_schedule = bench::default_q_schedule(a.size());
        for (const std::size_t batch : q_schedule) run_cell(bench::gen_queries(a.size(), batch, seed));
      }
    } else if (*run_lca) {
      for (const std::string& name : algos) bench::find_lca_algorithm(name);
      rmqbatch::LabeledTree tree = tree_path.empty()
                                       ? bench::gen_tree(n, seed)
                                       : rmqbatch::LabeledTree::from_parents(bench::read_tree(tree_path));
      CsvSink csv(csv_path);
      const bench::CellInput cell{tree.size(), seed, reps};
      auto run_cell = [&](const std::vector<Query>& queries) {
        const auto records = bench::run_lca(tree, queries, algos, cell);
        bench::write_csv(csv.out(), records);
        summarize(records, algos, bench::find_lca_algorithm);
      };
      if (!queries_path.empty()) {
        run_cell(bench::read_queries(queries_path));
      } else {
        if (q_schedule.empty()) q_schedule = bench::default_q_schedule(tree.size());
        for (const std::size_t batch : q_schedule) run_cell(bench::gen_queries(tree.size(), batch, seed));
      }
    } else if (*verify) {
      verify_config.base_seed = seed;
      const bench::VerifyReport report = bench::verify(verify_config);
      std::cout << "rmq instances: " << report.rmq_instances << ", lca instances: " << report.lca_instances
                << ", failures: " << report.failures.size() << "\n";
      for (const std::string& failure : report.failures) std::cout << "FAIL " << failure << "\n";
      return report.ok() ? 0 : 1;
    } else if (*lce) {
      std::ifstream in(text_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + text_path);
      const std::string text_bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      const rmqbatch::SuffixLcp index = rmqbatch::build_suffix_lcp(text_bytes);
      for (const std::size_t length : rmqbatch::lce_batch(index, bench::read_queries(queries_path))) {
        std::cout << length << "\n";
      }
    }
  } catch (const bench::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const bench::ChecksumMismatch& e) {
    std::cerr << "checksum mismatch: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
