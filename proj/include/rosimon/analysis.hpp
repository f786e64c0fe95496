#pragma once

#include <map>
#include <string>

#include "rosimon/formula.hpp"

namespace rosimon {

/// Per-node time horizon: the range of times at which a node's values are
/// needed by its ancestors. Root gets [0,0]; a child of a temporal node with
/// window I gets I (+) hor(parent); boolean children inherit. Untimed
/// operators contribute [0, +inf) windows, so horizons may have hi = +inf.
using HorizonMap = std::map<const Node*, Interval>;

HorizonMap compute_horizons(const Formula& f);

/// Latest data offset any proper subformula needs: max over proper
/// subformulas of sup(hor); 0 for a bare predicate, +inf iff an untimed
/// operator occurs below the root.
double last_offset(const Formula& f);

/// Untimed formula classes with constant-memory (atomic children) or
/// O(k)-memory (bounded children) monitors. Names follow the operator
/// skeleton; `first`/`second` are the extracted subtrees in skeleton order.
enum class UntimedShape {
  Always,                   // G phi
  Eventually,               // F phi
  Until,                    // phi U psi
  AlwaysOrEventually,       // G(phi or F psi)
  EventuallyAndAlways,      // F(phi and G psi)
  AlwaysEventually,         // G F phi
  EventuallyAlways,         // F G phi
  EventuallyAndEventually,  // F(phi and F psi)
  AlwaysOrAlways,           // G(phi or G psi)
  Unsupported,
};

struct UntimedClass {
  UntimedShape shape = UntimedShape::Unsupported;
  Formula first;
  Formula second;
};

/// Recognizes the untimed skeleton at the root (modulo commutativity of
/// and/or). Does not check that the extracted subtrees are bounded; the
/// engines reject unbounded ones.
UntimedClass classify_untimed(const Formula& f);

const char* to_string(UntimedShape s);

/// k = ceil(w / delta) where w is the largest last_offset over all proper
/// subformulas: the worst-case number of sample times inside any window of
/// length w when samples are at least delta apart. Throws
/// std::invalid_argument on delta <= 0 or an unbounded proper subformula.
int sample_buffer_bound(const Formula& f, double delta);

}  // namespace rosimon
