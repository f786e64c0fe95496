#pragma once

#include <span>
#include <vector>

#include "rosimon/interval.hpp"

namespace rosimon {

/// One worklist entry: the RoSI of a node's subformula at a time point.
struct WorklistEntry {
  double time = 0.0;
  Interval rosi;
};

/// Variable-step sliding maximum with look-ahead window [a,b] (0 <= a <= b,
/// b finite): the input is read as a left-closed step function (the last
/// entry's value extends right), and the output gives
/// y(t) = max over [t+a, t+b] of the input, endpointwise over the interval
/// values, for t in [first.time, last.time]. Maintains one monotonic edge
/// per interval endpoint; ties pop on >= so the newest maximal element is
/// kept. Empty input yields empty output.
std::vector<WorklistEntry> sliding_max(std::span<const WorklistEntry> entries,
                                       const Interval& window);

/// Dual of sliding_max (window minimum, pops on <=).
std::vector<WorklistEntry> sliding_min(std::span<const WorklistEntry> entries,
                                       const Interval& window);

namespace detail {

/// Breakpoint of a piecewise-constant interval-valued function: `at` is the
/// value at the instant t, `after` the value on the open segment up to the
/// next breakpoint. The two differ only where the function has an isolated
/// point value (e.g. the last observed sample before the unknown future).
struct StepEntry {
  double t = 0.0;
  Interval at;
  Interval after;
};

/// Piecewise-constant interval-valued function over time. Before the first
/// breakpoint (and wherever no data ever arrives) the value is `unknown`;
/// after the last breakpoint it is that breakpoint's `after`.
class StepFun {
 public:
  StepFun() = default;
  explicit StepFun(Interval unknown) : unknown_(unknown) {}

  const Interval& unknown() const { return unknown_; }
  void set_unknown(Interval u) { unknown_ = u; }

  const std::vector<StepEntry>& pts() const { return pts_; }
  std::vector<StepEntry>& pts() { return pts_; }

  /// Value at the instant tau.
  Interval at(double tau) const;
  /// Value just after tau (on the open segment starting there).
  Interval after(double tau) const;

  /// Appends a breakpoint, dropping it when it does not change the function.
  void push(double t, Interval at, Interval after);

  /// Drops breakpoints before `cutoff`, keeping the one whose segment covers
  /// cutoff so reads at/after cutoff stay exact.
  void drop_before(double cutoff);

  /// Removes breakpoints at or after `cutoff` so a recomputed suffix can be
  /// pushed in place of them.
  void truncate_from(double cutoff);

 private:
  std::vector<StepEntry> pts_;
  Interval unknown_ = Interval::universe();
};

/// Extremum of g over the closed range [l, r] (l <= r).
Interval range_extremum(const StepFun& g, double l, double r, bool is_max);

/// Folds g over the half-open range (l, r] into acc (componentwise min or
/// max): the open segment leaving l counts, the value just past r does not.
/// No-op when l >= r.
Interval fold_open_closed(const StepFun& g, double l, double r, Interval acc, bool is_max);

/// Sliding extremum of g over look-ahead windows [pos+a, pos+b], emitted as
/// breakpoints of the result restricted to positions in [from, to]. Position
/// candidates are the window-edge shifts of g's breakpoints; `from` is
/// always a candidate. Linear-time monotonic-edge sweep.
std::vector<StepEntry> sliding_extremum(const StepFun& g, double a, double b,
                                        double from, double to, bool is_max);

}  // namespace detail

}  // namespace rosimon
