#pragma once

#include <cstdint>

namespace rosimon::opcount {

// Thread-local tally of interval-level operations (min/max/neg/shift/
// predicate evaluations). Both the engines and the reference oracle bump the
// same counter, so their costs are directly comparable.
inline std::uint64_t& counter() {
  thread_local std::uint64_t n = 0;
  return n;
}

inline void reset() { counter() = 0; }
inline std::uint64_t read() { return counter(); }
inline void bump(std::uint64_t k = 1) { counter() += k; }

}  // namespace rosimon::opcount
