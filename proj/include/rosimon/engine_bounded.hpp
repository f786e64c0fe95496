#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rosimon/analysis.hpp"
#include "rosimon/formula.hpp"
#include "rosimon/signal.hpp"
#include "rosimon/worklist.hpp"

namespace rosimon {

enum class Verdict { Unknown, Satisfied, Falsified };

const char* to_string(Verdict v);

/// Sign reading of a RoSI: FALSIFIED when even the best completion is
/// negative (hi < 0), SATISFIED when even the worst is non-negative
/// (lo >= 0) -- zero robustness counts as satisfied -- UNKNOWN otherwise.
inline Verdict verdict_of(const Interval& rosi) {
  if (rosi.hi() < 0.0) return Verdict::Falsified;
  if (rosi.lo() >= 0.0) return Verdict::Satisfied;
  return Verdict::Unknown;
}

struct MonitorOptions {
  /// Skip recomputation of worklist prefixes that have become singular and
  /// keep running accumulators for single-point horizons. Off recomputes
  /// every node over its whole horizon each step; both paths produce
  /// identical values.
  bool sliding_optimization = true;
};

struct StepResult {
  Interval rosi;
  Verdict verdict = Verdict::Unknown;
};

namespace detail {

/// Runtime for one syntax tree: per-node piecewise-constant worklists over
/// each node's tracked time range, updated bottom-up per sample. Shared by
/// the bounded monitor (root tracked at [0,0]) and the untimed engine's
/// embedded subformula trackers (root tracked on [0, +inf) with pruning).
class TreeRuntime {
 public:
  TreeRuntime(Formula f, const std::map<std::string, Interval>& variable_bounds,
              Interval root_cover, MonitorOptions opts);

  /// Feeds one sample; caller guarantees strictly increasing times.
  void step(const Sample& s);

  Interval value_at(double tau) const;
  /// Root values at times <= final_until() can no longer change.
  double final_until() const;

  /// Prunes worklist entries that no reads at or after `t` can reach.
  void drop_before(double t);

  const Formula& formula() const { return formula_; }
  Interval value_of(const Node* n, double tau) const;
  std::size_t entries_of(const Node* n) const;
  std::size_t total_entries() const;

 private:
  struct NodeRt {
    const Node* ast = nullptr;
    int left = -1;
    int right = -1;
    Interval cover;
    StepFun fn;
    double final_to = -kInf;
    // Predicate streaming state.
    bool have_prev = false;
    double prev_time = 0.0;
    double prev_f = 0.0;
    bool resolved = false;
    // Running extremum for temporal nodes with a single-point cover.
    bool acc_valid = false;
    Interval acc;
    double acc_to = -kInf;
  };

  int build(const Formula& f, const Interval& cover,
            const std::map<std::string, Interval>& variable_bounds);
  void update_pred(NodeRt& rt, const Sample& s);
  void update_bool(NodeRt& rt);
  void update_temporal(NodeRt& rt);
  void update_until(NodeRt& rt);
  Interval until_value(const NodeRt& rt, double tau) const;

  Formula formula_;
  std::vector<NodeRt> nodes_;  // post-order; root last
  std::map<const Node*, int> index_;
  MonitorOptions opts_;
};

}  // namespace detail

/// Online RoSI monitor for bounded-horizon formulas. Feed samples in time
/// order; each step returns the robust satisfaction interval of the formula
/// over the observed prefix at time 0 and its verdict. Verdicts are
/// absorbing (completions only shrink the interval), so once decided the
/// monitor freezes and further steps are no-ops.
class BoundedMonitor {
 public:
  BoundedMonitor(Formula f, const std::map<std::string, Interval>& variable_bounds,
                 MonitorOptions opts = {});

  StepResult step(const Sample& s);

  const Interval& current_rosi() const { return rosi_; }
  Verdict verdict() const { return verdict_; }
  bool decided() const { return verdict_ != Verdict::Unknown; }

  /// Test hooks into the per-node worklists.
  Interval node_value(const Node* n, double tau) const { return tree_.value_of(n, tau); }
  std::size_t node_entries(const Node* n) const { return tree_.entries_of(n); }

 private:
  detail::TreeRuntime tree_;
  std::vector<std::string> vars_;
  Interval rosi_ = Interval::universe();
  Verdict verdict_ = Verdict::Unknown;
  bool seen_sample_ = false;
  double last_time_ = 0.0;
};

}  // namespace rosimon
