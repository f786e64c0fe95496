#include "rosimon/engine_untimed.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rosimon {

namespace {

bool atomic(const Formula& f) { return f && f->op == Op::Pred; }

Interval top() { return Interval(kInf, kInf); }
Interval bottom() { return Interval(-kInf, -kInf); }

}  // namespace

UntimedMonitor::UntimedMonitor(Formula f, const std::map<std::string, Interval>& variable_bounds,
                               std::optional<double> delta, MonitorOptions opts)
    : cls_(classify_untimed(f)) {
  if (cls_.shape == UntimedShape::Unsupported)
    throw std::invalid_argument("untimed formula outside the supported classes");
  if (!is_bounded(cls_.first) || (cls_.second && !is_bounded(cls_.second)))
    throw std::invalid_argument(
        "untimed class subformulas must have a bounded time horizon");

  vars_ = variables_of(cls_.first);
  if (cls_.second)
    for (const auto& v : variables_of(cls_.second))
      if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);

  buffered_ = !(atomic(cls_.first) && (!cls_.second || atomic(cls_.second)));
  if (buffered_) {
    if (!delta || !(*delta > 0.0))
      throw std::invalid_argument(
          "a positive minimum sample gap (delta) is required for non-atomic subformulas");
    delta_ = *delta;
    w_ = last_offset(cls_.first);
    if (cls_.second) w_ = std::max(w_, last_offset(cls_.second));
    k_ = static_cast<int>(std::ceil(w_ / delta_));
    const Interval unbounded_cover(0.0, kInf);
    tracker_p_ = std::make_unique<detail::TreeRuntime>(cls_.first, variable_bounds,
                                                       unbounded_cover, opts);
    if (cls_.second)
      tracker_q_ = std::make_unique<detail::TreeRuntime>(cls_.second, variable_bounds,
                                                         unbounded_cover, opts);
  }

  switch (cls_.shape) {
    case UntimedShape::Always:
    case UntimedShape::AlwaysOrEventually:
      summary_ = {top(), top()};
      break;
    case UntimedShape::Eventually:
    case UntimedShape::EventuallyAndAlways:
      summary_ = {bottom(), bottom()};
      break;
    case UntimedShape::Until:
      summary_ = {top(), bottom()};  // a: prefix min of p, b: running until value
      break;
    case UntimedShape::EventuallyAndEventually:
      summary_ = {bottom(), bottom()};  // a: prefix max of p, b: running value
      break;
    case UntimedShape::AlwaysOrAlways:
      summary_ = {top(), top()};
      break;
    case UntimedShape::AlwaysEventually:
    case UntimedShape::EventuallyAlways:
      summary_ = {top(), top()};  // unused: the newest child value is the answer
      break;
    case UntimedShape::Unsupported:
      break;
  }
}

void UntimedMonitor::advance_summary(const Interval& p, const Interval& q) {
  switch (cls_.shape) {
    case UntimedShape::Always:
      summary_.a = int_min(summary_.a, p);
      break;
    case UntimedShape::Eventually:
      summary_.a = int_max(summary_.a, p);
      break;
    case UntimedShape::Until:
      summary_.a = int_min(summary_.a, p);
      summary_.b = int_max(summary_.b, int_min(summary_.a, q));
      break;
    case UntimedShape::AlwaysOrEventually:
      summary_.a = int_max(q, int_min(p, summary_.a));
      break;
    case UntimedShape::EventuallyAndAlways:
      summary_.a = int_min(q, int_max(p, summary_.a));
      break;
    case UntimedShape::EventuallyAndEventually:
      summary_.a = int_max(summary_.a, p);
      summary_.b = int_max(summary_.b, int_min(q, summary_.a));
      break;
    case UntimedShape::AlwaysOrAlways:
      summary_.a = int_min(summary_.a, p);
      summary_.b = int_min(summary_.b, int_max(q, summary_.a));
      break;
    case UntimedShape::AlwaysEventually:
    case UntimedShape::EventuallyAlways:
    case UntimedShape::Unsupported:
      break;
  }
}

Interval UntimedMonitor::combine() const {
  Interval a = summary_.a;
  Interval b = summary_.b;
  auto p_at = [&](double t) { return tracker_p_->value_at(t); };
  auto q_at = [&](double t) { return tracker_q_->value_at(t); };
  switch (cls_.shape) {
    case UntimedShape::Always:
      for (double t : pending_) a = int_min(a, p_at(t));
      return a;
    case UntimedShape::Eventually:
      for (double t : pending_) a = int_max(a, p_at(t));
      return a;
    case UntimedShape::Until:
      for (double t : pending_) {
        a = int_min(a, p_at(t));
        b = int_max(b, int_min(a, q_at(t)));
      }
      return b;
    case UntimedShape::AlwaysOrEventually:
      for (double t : pending_) a = int_max(q_at(t), int_min(p_at(t), a));
      return a;
    case UntimedShape::EventuallyAndAlways:
      for (double t : pending_) a = int_min(q_at(t), int_max(p_at(t), a));
      return a;
    case UntimedShape::EventuallyAndEventually:
      for (double t : pending_) {
        a = int_max(a, p_at(t));
        b = int_max(b, int_min(q_at(t), a));
      }
      return b;
    case UntimedShape::AlwaysOrAlways:
      for (double t : pending_) {
        a = int_min(a, p_at(t));
        b = int_min(b, int_max(q_at(t), a));
      }
      return b;
    case UntimedShape::AlwaysEventually:
    case UntimedShape::EventuallyAlways:
    case UntimedShape::Unsupported:
      break;
  }
  return Interval::universe();
}

bool UntimedMonitor::verdict_is_permanent(Verdict v) const {
  switch (cls_.shape) {
    case UntimedShape::Always:
    case UntimedShape::AlwaysOrAlways:
      return v == Verdict::Falsified;  // min-shaped: upper bound only decreases
    case UntimedShape::Eventually:
    case UntimedShape::Until:
    case UntimedShape::EventuallyAndEventually:
      return v == Verdict::Satisfied;  // max-shaped: lower bound only increases
    default:
      return false;
  }
}

StepResult UntimedMonitor::step(const Sample& s) {
  if (seen_sample_ && s.time <= last_time_)
    throw InputError("sample times must be strictly increasing");
  if (buffered_ && seen_sample_ && s.time - last_time_ < delta_)
    throw InputError("samples closer than the declared minimum gap delta");
  for (const auto& var : vars_)
    if (!s.values.count(var)) throw InputError("sample is missing variable '" + var + "'");

  const bool newest_only = cls_.shape == UntimedShape::AlwaysEventually ||
                           cls_.shape == UntimedShape::EventuallyAlways;
  if (!buffered_) {
    const Interval p = Interval::point(cls_.first->pred.eval(s.values));
    if (newest_only) {
      rosi_ = p;
    } else {
      const Interval q =
          cls_.second ? Interval::point(cls_.second->pred.eval(s.values)) : Interval::universe();
      advance_summary(p, q);
      switch (cls_.shape) {
        case UntimedShape::Until:
        case UntimedShape::EventuallyAndEventually:
        case UntimedShape::AlwaysOrAlways:
          rosi_ = summary_.b;
          break;
        default:
          rosi_ = summary_.a;
      }
    }
  } else {
    tracker_p_->step(s);
    if (tracker_q_) tracker_q_->step(s);
    if (newest_only) {
      rosi_ = tracker_p_->value_at(s.time);
      tracker_p_->drop_before(s.time);
    } else {
      pending_.push_back(s.time);
      while (!pending_.empty()) {
        const double t = pending_.front();
        const bool exact = t <= tracker_p_->final_until() &&
                           (!tracker_q_ || t <= tracker_q_->final_until());
        if (!exact) break;
        advance_summary(tracker_p_->value_at(t),
                        tracker_q_ ? tracker_q_->value_at(t) : Interval::universe());
        pending_.pop_front();
      }
      const double keep_from = pending_.empty() ? s.time : pending_.front();
      tracker_p_->drop_before(keep_from);
      if (tracker_q_) tracker_q_->drop_before(keep_from);
      if (static_cast<int>(pending_.size()) > k_)
        throw InputError("pending buffer exceeds its bound: minimum gap (delta) violated");
      rosi_ = combine();
    }
  }

  seen_sample_ = true;
  last_time_ = s.time;
  verdict_ = verdict_of(rosi_);
  if (verdict_is_permanent(verdict_) && verdict_ != Verdict::Unknown) decided_ = true;
  return {rosi_, verdict_};
}

int UntimedMonitor::summary_interval_count() const {
  switch (cls_.shape) {
    case UntimedShape::Until:
    case UntimedShape::EventuallyAndEventually:
    case UntimedShape::AlwaysOrAlways:
      return 2;
    case UntimedShape::AlwaysEventually:
    case UntimedShape::EventuallyAlways:
      return 0;
    default:
      return 1;
  }
}

}  // namespace rosimon
