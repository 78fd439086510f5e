#include "rmqbatch/lce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "rmqbatch/sparse_table.hpp"

namespace rmqbatch {

SuffixLcp build_suffix_lcp(std::string_view text) {
  const std::size_t n = text.size();
  if (n == 0) throw std::invalid_argument("suffix array of empty text");

  SuffixLcp out;
  out.text.assign(text);
  out.sa.resize(n);
  out.rank.resize(n);
  std::iota(out.sa.begin(), out.sa.end(), std::size_t{0});
  for (std::size_t p = 0; p < n; ++p) out.rank[p] = static_cast<unsigned char>(text[p]);

  std::vector<std::size_t> next(n);
  for (std::size_t len = 1;; len *= 2) {
    // Key of suffix p: (rank[p], rank[p+len] + 1, or 0 past the end).
    auto key = [&](std::size_t p) {
      return std::pair(out.rank[p], p + len < n ? out.rank[p + len] + 1 : 0);
    };
    std::sort(out.sa.begin(), out.sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[out.sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      next[out.sa[r]] = next[out.sa[r - 1]] + (key(out.sa[r - 1]) < key(out.sa[r]) ? 1 : 0);
    }
    out.rank.swap(next);
    if (out.rank[out.sa[n - 1]] == n - 1 || len >= n) break;
  }

  // Kasai: h drops by at most one from suffix p to suffix p+1.
  out.lcp.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t r = out.rank[p];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t prev = out.sa[r - 1];
    while (p + h < n && prev + h < n && text[p + h] == text[prev + h]) ++h;
    out.lcp[r] = static_cast<Value>(h);
    if (h > 0) --h;
  }
  return out;
}

std::vector<std::size_t> lce_batch(const SuffixLcp& index, std::span<const Query> pairs, ScanStats* stats) {
  const std::size_t n = index.text.size();
  std::vector<std::size_t> lengths(pairs.size());
  std::vector<Query> ranges;
  std::vector<std::size_t> owner;
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const auto [i, j] = pairs[t];
    if (i >= n || j >= n) throw QueryError(t, "text position out of range");
    if (i == j) {
      lengths[t] = n - i;
      continue;
    }
    const auto [lo, hi] = std::minmax(index.rank[i], index.rank[j]);
    ranges.push_back({lo + 1, hi});
    owner.push_back(t);
  }
  if (ranges.empty()) return lengths;

  std::vector<Value> lcp = index.lcp;
  // Every LCP value is below n, so n bounds the maximum without a scan.
  const AnswerSet positions = st_rmq_con(lcp, ranges, {.mu = static_cast<Value>(n), .stats = stats});
  for (std::size_t k = 0; k < ranges.size(); ++k) {
    lengths[owner[k]] = static_cast<std::size_t>(lcp[positions[k]]);
  }
  return lengths;
}

}  // namespace rmqbatch
