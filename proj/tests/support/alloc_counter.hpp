#ifndef RMQBATCH_TESTS_ALLOC_COUNTER_HPP
#define RMQBATCH_TESTS_ALLOC_COUNTER_HPP

#include <cstddef>

// Byte accounting for every global operator new/delete in the binary that
// links alloc_counter.cpp.
namespace rmqbatch::testing {

std::size_t live_bytes();
std::size_t peak_bytes();
// Sets the peak to the current live total.
void reset_peak();

// Peak bytes allocated above the live total at construction.
class AllocationWindow {
 public:
  AllocationWindow() : base_(live_bytes()) { reset_peak(); }
  std::size_t peak() const { return peak_bytes() - base_; }
  std::size_t peak_words() const { return (peak() + sizeof(void*) - 1) / sizeof(void*); }

 private:
  std::size_t base_;
};

}  // namespace rmqbatch::testing

#endif  // RMQBATCH_TESTS_ALLOC_COUNTER_HPP
