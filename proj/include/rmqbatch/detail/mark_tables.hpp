#ifndef RMQBATCH_DETAIL_MARK_TABLES_HPP
#define RMQBATCH_DETAIL_MARK_TABLES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rmqbatch/rmq_core.hpp"

namespace rmqbatch::detail {

// Endpoint references are packed as 2 * ordinal + role.
inline constexpr std::uint32_t kNoRef = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::size_t kMaxQueries = (std::size_t{1} << 31) - 1;

inline std::uint32_t endpoint_ref(std::size_t ordinal, bool right) {
  return static_cast<std::uint32_t>(2 * ordinal + (right ? 1 : 0));
}

inline void assign_endpoint(std::vector<Query>& queries, std::uint32_t ref, std::size_t position) {
  Query& q = queries[ref >> 1];
  if (ref & 1U) {
    q.j = position;
  } else {
    q.i = position;
  }
}

inline void check_batch_size(std::size_t q) {
  if (q > kMaxQueries) throw std::length_error("query batch too large");
}

// The Z0/Z1 pair: for each of the 2q mark slots, the saved original entry
// and the head of a singly linked list of endpoint references. List nodes
// are the references themselves, so next[] needs exactly 2q cells.
template <class Saved>
struct MarkTables {
  explicit MarkTables(std::size_t q) : saved(2 * q), head(2 * q, kNoRef), next(2 * q, kNoRef) {}

  std::size_t slots() const { return saved.size(); }

  void link(std::size_t slot, std::uint32_t ref) {
    next[ref] = head[slot];
    head[slot] = ref;
  }

  template <class Fn>
  void for_each_ref(std::size_t slot, Fn&& fn) const {
    for (std::uint32_t ref = head[slot]; ref != kNoRef; ref = next[ref]) fn(ref);
  }

  std::vector<Saved> saved;
  std::vector<std::uint32_t> head;
  std::vector<std::uint32_t> next;
  std::size_t issued = 0;
};

// Mathematical modulo; marks may be negative when the array maximum is.
inline std::size_t floor_mod(Value x, std::size_t m) {
  const auto sm = static_cast<Value>(m);
  const Value r = x % sm;
  return static_cast<std::size_t>(r < 0 ? r + sm : r);
}

}  // namespace rmqbatch::detail

#endif  // RMQBATCH_DETAIL_MARK_TABLES_HPP
