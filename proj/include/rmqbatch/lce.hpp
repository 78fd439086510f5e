#ifndef RMQBATCH_LCE_HPP
#define RMQBATCH_LCE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmqbatch/rmq_core.hpp"

namespace rmqbatch {

// Suffix array, its inverse and the LCP array of a byte string.
// lcp[r] = LCP(suffix sa[r-1], suffix sa[r]); lcp[0] = 0.
struct SuffixLcp {
  std::string text;
  std::vector<std::size_t> sa;
  std::vector<std::size_t> rank;
  std::vector<Value> lcp;
};

// Prefix doubling with std::sort, then Kasai. Throws on empty text.
SuffixLcp build_suffix_lcp(std::string_view text);

// Longest common extension of suffixes i and j for every pair, answered as
// one batch of RMQs over a private copy of the LCP array with mu = n.
// Throws QueryError for positions outside the text.
std::vector<std::size_t> lce_batch(const SuffixLcp& index, std::span<const Query> pairs,
                                   ScanStats* stats = nullptr);

}  // namespace rmqbatch

#endif  // RMQBATCH_LCE_HPP
