#pragma once

#include <deque>
#include <memory>
#include <optional>

#include "rosimon/engine_bounded.hpp"

namespace rosimon {

/// Monitor for the supported untimed formula classes. Reports prefix
/// robustness: the RoSI of the untimed formula evaluated over the samples
/// observed so far (the min/max recurrences over the sampled time points),
/// not a bound over all suffix completions.
///
/// Two modes, picked automatically:
///  - constant memory when the extracted subformulas are atomic predicates
///    (at most two summary intervals of state);
///  - O(k) memory when they are bounded non-atomic subformulas: embedded
///    bounded trackers per child plus ring buffers of at most
///    k = ceil(w / delta) pending sample times, where w is the largest data
///    offset any child needs and delta the guaranteed minimum sample gap
///    (required up front; a closer pair is an input error).
///
/// A verdict is reported each step but only some are permanent under the
/// class's recurrence (e.g. a min-shaped summary can only falsify forever,
/// never satisfy forever); decided() latches once a permanent verdict is
/// reached. The recurrences stay O(1) per step, so the monitor keeps
/// computing if fed further samples -- early stopping is the caller's call.
class UntimedMonitor {
 public:
  UntimedMonitor(Formula f, const std::map<std::string, Interval>& variable_bounds,
                 std::optional<double> delta, MonitorOptions opts = {});

  StepResult step(const Sample& s);

  UntimedShape shape() const { return cls_.shape; }
  bool constant_memory_mode() const { return !buffered_; }
  Verdict verdict() const { return verdict_; }
  bool decided() const { return decided_; }
  const Interval& current_rosi() const { return rosi_; }

  /// Instrumentation for the memory-bound checks.
  int summary_interval_count() const;
  std::size_t buffer_occupancy() const { return pending_.size(); }
  int buffer_capacity() const { return k_; }
  /// Worklist entries retained across the embedded trackers after pruning.
  std::size_t tracker_entries() const {
    std::size_t n = 0;
    if (tracker_p_) n += tracker_p_->total_entries();
    if (tracker_q_) n += tracker_q_->total_entries();
    return n;
  }

 private:
  struct Summary {
    // Up to two accumulators; meaning depends on the class:
    //   min-shaped classes start at [+inf,+inf], max-shaped at [-inf,-inf].
    Interval a;
    Interval b;
  };

  void advance_summary(const Interval& p, const Interval& q);
  Interval combine() const;
  bool verdict_is_permanent(Verdict v) const;

  UntimedClass cls_;
  std::vector<std::string> vars_;
  bool buffered_ = false;
  double delta_ = 0.0;
  int k_ = 0;
  double w_ = 0.0;

  // Constant-memory mode evaluates predicate operands directly; buffered
  // mode reads embedded bounded trackers at the pending sample times.
  std::unique_ptr<detail::TreeRuntime> tracker_p_;
  std::unique_ptr<detail::TreeRuntime> tracker_q_;

  Summary summary_;
  std::deque<double> pending_;

  Interval rosi_ = Interval::universe();
  Verdict verdict_ = Verdict::Unknown;
  bool decided_ = false;
  bool seen_sample_ = false;
  double last_time_ = 0.0;
};

}  // namespace rosimon
