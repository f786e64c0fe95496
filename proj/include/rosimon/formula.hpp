#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rosimon/interval.hpp"

namespace rosimon {

/// Atomic signal predicate in normalized f(x) > 0 form, with f a linear
/// combination of variables plus a constant. Comparisons against other
/// directions/relations are normalized at parse time (x < c becomes
/// c - x > 0; >= and <= collapse onto the strict forms, which the
/// quantitative semantics does not distinguish).
struct Predicate {
  std::map<std::string, double> coeffs;
  double constant = 0.0;

  double eval(const std::map<std::string, double>& values) const;

  /// [f_inf, f_sup] of f over the box given by per-variable bounds;
  /// variables missing from the map range over (-inf, +inf).
  Interval range(const std::map<std::string, Interval>& variable_bounds) const;
};

enum class Op { Pred, Not, And, Or, Always, Eventually, Until };

struct Node;
using Formula = std::shared_ptr<const Node>;

/// Immutable syntax-tree node. Temporal nodes carry a closed window with
/// 0 <= lo <= hi < inf; an absent window means the untimed operator.
struct Node {
  Op op = Op::Pred;
  Predicate pred;                  // Op::Pred only
  std::optional<Interval> window;  // temporal ops only
  Formula left;                    // unary child / first binary child
  Formula right;                   // second binary child
};

Formula make_pred(Predicate p);
Formula make_not(Formula f);
Formula make_and(Formula l, Formula r);
Formula make_or(Formula l, Formula r);
Formula make_always(std::optional<Interval> window, Formula f);
Formula make_eventually(std::optional<Interval> window, Formula f);
Formula make_until(std::optional<Interval> window, Formula l, Formula r);

inline bool is_temporal(Op op) {
  return op == Op::Always || op == Op::Eventually || op == Op::Until;
}

/// True when every temporal operator in the tree carries a window.
bool is_bounded(const Formula& f);

/// Variables referenced by the formula, sorted.
std::vector<std::string> variables_of(const Formula& f);

/// Canonical concrete syntax; parse(render(f)) reproduces f exactly.
std::string render(const Formula& f);

}  // namespace rosimon
