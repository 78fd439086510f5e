#include "rmqbatch/contraction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "rmqbatch/detail/mark_tables.hpp"

namespace rmqbatch {
namespace {

struct PlainCells {
  std::span<Value> a;

  std::size_t size() const { return a.size(); }
  Value load(std::size_t p) const { return a[p]; }
  void store(std::size_t p, Value v) { a[p] = v; }
};

struct CountingCells {
  std::span<Value> a;
  ScanStats* stats;

  std::size_t size() const { return a.size(); }
  Value load(std::size_t p) const {
    ++stats->reads;
    return a[p];
  }
  void store(std::size_t p, Value v) {
    ++stats->writes;
    a[p] = v;
  }
};

template <class Cells>
Value scan_max(const Cells& cells) {
  Value mu = cells.load(0);
  for (std::size_t p = 1; p < cells.size(); ++p) mu = std::max(mu, cells.load(p));
  return mu;
}

template <class Cells>
ContractedArray contract_cells(Cells cells, std::span<const Query> queries,
                               std::optional<Value> known_mu) {
  const std::size_t n = cells.size();
  const std::size_t q = queries.size();
  const Value mu = known_mu ? *known_mu : scan_max(cells);
  if (mu > std::numeric_limits<Value>::max() - static_cast<Value>(2 * q)) {
    throw OverflowError("array maximum " + std::to_string(mu) + " leaves no room for " +
                        std::to_string(2 * q) + " marks");
  }

  detail::MarkTables<Value> tables(q);
  ContractedArray out;
  out.mu = mu;
  out.remapped.assign(queries.begin(), queries.end());
  // All allocation happens before the first write to the caller's array.
  const std::size_t bound = std::min(n, 4 * q + 1);
  out.a_q.reserve(bound);
  out.f.reserve(bound);
  out.marked.reserve(std::min(n, 2 * q));

  auto mark = [&](std::size_t position, std::uint32_t ref) {
    const Value v = cells.load(position);
    if (v <= mu) {
      ++tables.issued;
      const Value label = mu + static_cast<Value>(tables.issued);
      const std::size_t slot = detail::floor_mod(label, tables.slots());
      tables.saved[slot] = v;
      tables.head[slot] = detail::kNoRef;
      cells.store(position, label);
      tables.link(slot, ref);
    } else {
      tables.link(detail::floor_mod(v, tables.slots()), ref);
    }
  };
  for (std::size_t t = 0; t < q; ++t) {
    mark(queries[t].i, detail::endpoint_ref(t, false));
    mark(queries[t].j, detail::endpoint_ref(t, true));
  }

  bool open = false;
  Value block_min = 0;
  std::size_t block_pos = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const Value v = cells.load(m);
    if (v > mu) {
      if (open) {
        out.a_q.push_back(block_min);
        out.f.push_back(block_pos);
        open = false;
      }
      const std::size_t slot = detail::floor_mod(v, tables.slots());
      const std::size_t p = out.a_q.size();
      out.a_q.push_back(tables.saved[slot]);
      out.f.push_back(m);
      out.marked.push_back(static_cast<std::uint32_t>(p));
      tables.for_each_ref(slot, [&](std::uint32_t ref) { detail::assign_endpoint(out.remapped, ref, p); });
    } else if (!open || v < block_min) {
      open = true;
      block_min = v;
      block_pos = m;
    }
  }
  if (open) {
    out.a_q.push_back(block_min);
    out.f.push_back(block_pos);
  }
  return out;
}

}  // namespace

Value find_max(std::span<const Value> a) {
  if (a.empty()) throw std::invalid_argument("find_max on empty array");
  return *std::max_element(a.begin(), a.end());
}

ContractedArray contract(std::span<Value> a, std::span<const Query> queries,
                         const ContractOptions& options) {
  if (a.empty()) throw std::invalid_argument("contract on empty array");
  if (queries.empty()) throw std::invalid_argument("contract needs at least one query");
  detail::check_batch_size(queries.size());
  validate_queries(a.size(), queries);
  if (options.stats != nullptr) {
    return contract_cells(CountingCells{a, options.stats}, queries, options.mu);
  }
  return contract_cells(PlainCells{a}, queries, options.mu);
}

std::size_t map_answer(const ContractedArray& contracted, std::size_t p) {
  if (p >= contracted.f.size()) {
    throw std::out_of_range("contracted position " + std::to_string(p) + " out of range");
  }
  return contracted.f[p];
}

void restore(std::span<Value> a, const ContractedArray& contracted) {
  for (std::size_t p = 0; p < contracted.f.size(); ++p) a[contracted.f[p]] = contracted.a_q[p];
}

}  // namespace rmqbatch
