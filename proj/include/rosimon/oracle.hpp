#pragma once

#include <cstdint>
#include <span>

#include "rosimon/analysis.hpp"
#include "rosimon/formula.hpp"
#include "rosimon/signal.hpp"

namespace rosimon::oracle {

struct OracleResult {
  Interval rosi;
  std::uint64_t evals = 0;
};

/// Direct recursive evaluation of the robust satisfaction interval of a
/// bounded formula over a partial signal at time tau. Window infima/suprema
/// are taken over the finite candidate set of breakpoints (sample times
/// shifted by every window-edge composition) plus segment midpoints, which
/// is exact because everything is piecewise constant. Deliberately naive
/// (re-evaluates subformulas per candidate point); used only as a test
/// reference.
OracleResult offline_rosi(const Formula& f, const PartialSignal& sig, double tau);

/// Scalar robust satisfaction value over a complete signal (no partiality):
/// the classic quantitative semantics, as an independent cross-check of the
/// singular case of offline_rosi.
double robustness(const Formula& f, const PartialSignal& sig, double tau);

/// Literal expansions of the untimed prefix-robustness expressions per
/// class, O(n^2)/O(n^3) in the prefix length. `p`/`q` are the child RoSI
/// sequences at the sample times observed so far; classes without a second
/// child ignore `q`.
Interval brute_untimed(UntimedShape shape, std::span<const Interval> p,
                       std::span<const Interval> q);

}  // namespace rosimon::oracle
