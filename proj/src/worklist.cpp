#include "rosimon/worklist.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "rosimon/opcount.hpp"

namespace rosimon {

namespace detail {

namespace {

// Breakpoints flattened onto the extended timeline (t, side): side 0 is the
// instant value, side 1 the value on the open segment after it. Window
// extrema over real closed intervals become closed ranges of extended keys,
// which makes the at/after distinction exact in one sweep.
struct ExtItem {
  double t;
  int side;
  Interval v;
};

bool key_le(double t1, int s1, double t2, int s2) {
  if (t1 != t2) return t1 < t2;
  return s1 <= s2;
}

}  // namespace

Interval StepFun::at(double tau) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), tau,
                             [](const StepEntry& e, double t) { return e.t < t; });
  if (it != pts_.end() && it->t == tau) return it->at;
  if (it == pts_.begin()) return unknown_;
  return std::prev(it)->after;
}

Interval StepFun::after(double tau) const {
  auto it = std::upper_bound(pts_.begin(), pts_.end(), tau,
                             [](double t, const StepEntry& e) { return t < e.t; });
  if (it == pts_.begin()) return unknown_;
  return std::prev(it)->after;
}

void StepFun::push(double t, Interval at_v, Interval after_v) {
  const Interval& prev_after = pts_.empty() ? unknown_ : pts_.back().after;
  if (at_v == prev_after && after_v == prev_after) return;
  assert(pts_.empty() || t > pts_.back().t);
  pts_.push_back({t, at_v, after_v});
}

void StepFun::drop_before(double cutoff) {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), cutoff,
                             [](const StepEntry& e, double t) { return e.t < t; });
  if (it == pts_.begin()) return;
  // Keep the predecessor: its segment covers reads at and after cutoff.
  pts_.erase(pts_.begin(), std::prev(it));
}

void StepFun::truncate_from(double cutoff) {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), cutoff,
                             [](const StepEntry& e, double t) { return e.t < t; });
  pts_.erase(it, pts_.end());
}

Interval range_extremum(const StepFun& g, double l, double r, bool is_max) {
  auto comb = [&](const Interval& a, const Interval& b) {
    return is_max ? int_max(a, b) : int_min(a, b);
  };
  Interval v = g.at(l);
  if (l < r) {
    v = comb(v, g.after(l));
    const auto& pts = g.pts();
    auto it = std::upper_bound(pts.begin(), pts.end(), l,
                               [](double t, const StepEntry& e) { return t < e.t; });
    for (; it != pts.end() && it->t <= r; ++it) {
      v = comb(v, it->at);
      if (it->t < r) v = comb(v, it->after);
    }
  }
  return v;
}

Interval fold_open_closed(const StepFun& g, double l, double r, Interval acc, bool is_max) {
  if (!(l < r)) return acc;
  auto comb = [&](const Interval& a, const Interval& b) {
    return is_max ? int_max(a, b) : int_min(a, b);
  };
  acc = comb(acc, g.after(l));
  const auto& pts = g.pts();
  auto it = std::upper_bound(pts.begin(), pts.end(), l,
                             [](double t, const StepEntry& e) { return t < e.t; });
  for (; it != pts.end() && it->t <= r; ++it) {
    acc = comb(acc, it->at);
    if (it->t < r) acc = comb(acc, it->after);
  }
  return acc;
}

namespace {

// One monotonic-edge pass over the flattened items for a fixed key side:
// for each position pos the window is the closed extended-key range
// [(pos+a, side), (pos+b, side)]. The edge deques hold indices whose
// endpoint values are non-increasing front to back; ties pop on >= (max)
// resp. <= (min), keeping the newest extremal item.
std::vector<Interval> edge_pass(const std::vector<ExtItem>& items, const Interval& unknown,
                                const std::vector<double>& positions, double a, double b,
                                int side, bool is_max) {
  std::deque<std::size_t> lo_edge;
  std::deque<std::size_t> hi_edge;
  std::size_t add = 0;
  std::ptrdiff_t pred = -1;
  std::vector<Interval> out;
  out.reserve(positions.size());

  auto dominates = [&](double candidate, double incumbent) {
    opcount::bump();
    return is_max ? candidate >= incumbent : candidate <= incumbent;
  };

  for (double pos : positions) {
    const double l = pos + a;
    const double r = pos + b;
    while (add < items.size() && key_le(items[add].t, items[add].side, r, side)) {
      while (!lo_edge.empty() && dominates(items[add].v.lo(), items[lo_edge.back()].v.lo()))
        lo_edge.pop_back();
      lo_edge.push_back(add);
      while (!hi_edge.empty() && dominates(items[add].v.hi(), items[hi_edge.back()].v.hi()))
        hi_edge.pop_back();
      hi_edge.push_back(add);
      ++add;
    }
    while (pred + 1 < static_cast<std::ptrdiff_t>(items.size()) &&
           key_le(items[pred + 1].t, items[pred + 1].side, l, side))
      ++pred;
    while (!lo_edge.empty() && key_le(items[lo_edge.front()].t, items[lo_edge.front()].side, l, side))
      lo_edge.pop_front();
    while (!hi_edge.empty() && key_le(items[hi_edge.front()].t, items[hi_edge.front()].side, l, side))
      hi_edge.pop_front();

    Interval base = pred >= 0 ? items[pred].v : unknown;
    double vlo = base.lo();
    double vhi = base.hi();
    if (!lo_edge.empty()) {
      opcount::bump();
      const double c = items[lo_edge.front()].v.lo();
      vlo = is_max ? std::max(vlo, c) : std::min(vlo, c);
    }
    if (!hi_edge.empty()) {
      opcount::bump();
      const double c = items[hi_edge.front()].v.hi();
      vhi = is_max ? std::max(vhi, c) : std::min(vhi, c);
    }
    out.push_back(Interval(vlo, vhi));
  }
  return out;
}

}  // namespace

std::vector<StepEntry> sliding_extremum(const StepFun& g, double a, double b,
                                        double from, double to, bool is_max) {
  assert(0.0 <= a && a <= b);
  // Only breakpoints the window [from + a, to + b] can see matter; keep the
  // predecessor of the left edge so segment values at the edge stay exact.
  const auto& pts = g.pts();
  auto first = std::lower_bound(pts.begin(), pts.end(), from + a,
                                [](const StepEntry& e, double t) { return e.t < t; });
  if (first != pts.begin()) --first;
  auto last = pts.end();
  if (std::isfinite(to))
    last = std::upper_bound(first, pts.end(), to + b,
                            [](double t, const StepEntry& e) { return t < e.t; });

  std::vector<double> positions;
  positions.push_back(from);
  for (auto it = first; it != last; ++it) {
    for (double shift : {b, a}) {
      const double pos = it->t - shift;
      if (pos > from && pos <= to) positions.push_back(pos);
    }
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  std::vector<ExtItem> items;
  items.reserve(static_cast<std::size_t>(last - first) * 2);
  for (auto it = first; it != last; ++it) {
    items.push_back({it->t, 0, it->at});
    if (!(it->after == it->at)) items.push_back({it->t, 1, it->after});
  }
  // When the front was trimmed every window's left edge is at or past the
  // retained predecessor, so the no-predecessor fallback stays `unknown`.
  const auto at_vals = edge_pass(items, g.unknown(), positions, a, b, 0, is_max);
  const auto after_vals = edge_pass(items, g.unknown(), positions, a, b, 1, is_max);

  std::vector<StepEntry> out;
  out.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    out.push_back({positions[i], at_vals[i], after_vals[i]});
  return out;
}

}  // namespace detail

namespace {

std::vector<WorklistEntry> sliding_pass(std::span<const WorklistEntry> entries,
                                        const Interval& window, bool is_max) {
  assert(!window.is_empty() && window.lo() >= 0.0 && std::isfinite(window.hi()));
  if (entries.empty()) return {};
  detail::StepFun g;
  for (const auto& e : entries) {
    assert(!e.rosi.is_empty());
    g.pts().push_back({e.time, e.rosi, e.rosi});
  }
  auto ext = detail::sliding_extremum(g, window.lo(), window.hi(), entries.front().time,
                                      entries.back().time, is_max);
  std::vector<WorklistEntry> out;
  out.reserve(ext.size());
  for (const auto& e : ext) {
    assert(e.at == e.after);
    out.push_back({e.t, e.at});
  }
  return out;
}

}  // namespace

std::vector<WorklistEntry> sliding_max(std::span<const WorklistEntry> entries,
                                       const Interval& window) {
  return sliding_pass(entries, window, true);
}

std::vector<WorklistEntry> sliding_min(std::span<const WorklistEntry> entries,
                                       const Interval& window) {
  return sliding_pass(entries, window, false);
}

}  // namespace rosimon
