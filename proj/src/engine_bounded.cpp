#include "rosimon/engine_bounded.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rosimon {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Falsified: return "falsified";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace detail {

namespace {

Interval unknown_of(const Node& n, const std::map<std::string, Interval>& bounds,
                    const Interval& ul, const Interval& ur) {
  switch (n.op) {
    case Op::Pred: return n.pred.range(bounds);
    case Op::Not: return neg(ul);
    case Op::And: return int_min(ul, ur);
    case Op::Or: return int_max(ul, ur);
    case Op::Always:
    case Op::Eventually: return ul;
    case Op::Until:
      // With both children unknown the until clause collapses to the second
      // child's bound when the window starts at 0 (the tau2 = tau candidate
      // has an empty inner infimum), else to the min of the two.
      return n.window->lo() == 0.0 ? ur : int_min(ur, ul);
  }
  return Interval::universe();
}

}  // namespace

TreeRuntime::TreeRuntime(Formula f, const std::map<std::string, Interval>& variable_bounds,
                         Interval root_cover, MonitorOptions opts)
    : formula_(std::move(f)), opts_(opts) {
  if (!formula_) throw std::invalid_argument("null formula");
  build(formula_, root_cover, variable_bounds);
}

int TreeRuntime::build(const Formula& f, const Interval& cover,
                       const std::map<std::string, Interval>& variable_bounds) {
  if (is_temporal(f->op) && !f->window)
    throw std::invalid_argument("engine requires bounded temporal operators");
  int left = -1;
  int right = -1;
  if (f->left) {
    Interval child_cover = cover;
    if (is_temporal(f->op)) {
      // The first until child is read on (tau, tau2) for tau2 up to
      // tau + sup(window), i.e. from offset 0, not from the window start.
      child_cover = f->op == Op::Until
                        ? minkowski_sum(Interval(0.0, f->window->hi()), cover)
                        : minkowski_sum(*f->window, cover);
    }
    left = build(f->left, child_cover, variable_bounds);
  }
  if (f->right) {
    Interval child_cover = cover;
    if (is_temporal(f->op)) child_cover = minkowski_sum(*f->window, cover);
    right = build(f->right, child_cover, variable_bounds);
  }
  NodeRt rt;
  rt.ast = f.get();
  rt.left = left;
  rt.right = right;
  rt.cover = cover;
  const Interval ul = left >= 0 ? nodes_[left].fn.unknown() : Interval::universe();
  const Interval ur = right >= 0 ? nodes_[right].fn.unknown() : Interval::universe();
  rt.fn.set_unknown(unknown_of(*f, variable_bounds, ul, ur));
  rt.acc = rt.fn.unknown();
  nodes_.push_back(std::move(rt));
  index_[f.get()] = static_cast<int>(nodes_.size()) - 1;
  return static_cast<int>(nodes_.size()) - 1;
}

void TreeRuntime::step(const Sample& s) {
  for (auto& rt : nodes_) {
    switch (rt.ast->op) {
      case Op::Pred: update_pred(rt, s); break;
      case Op::Not:
      case Op::And:
      case Op::Or: update_bool(rt); break;
      case Op::Always:
      case Op::Eventually: update_temporal(rt); break;
      case Op::Until: update_until(rt); break;
    }
  }
}

void TreeRuntime::update_pred(NodeRt& rt, const Sample& s) {
  rt.final_to = std::max(rt.final_to, s.time);
  if (rt.resolved) return;
  const double f = rt.ast->pred.eval(s.values);
  const Interval fi = Interval::point(f);
  const double lo = rt.cover.lo();
  const double hi = rt.cover.hi();
  const double t = s.time;

  if (t < lo) {
    rt.have_prev = true;
    rt.prev_time = t;
    rt.prev_f = f;
    return;
  }
  if (rt.fn.pts().empty()) {
    // The segment from the last pre-cover sample resolves [lo, t).
    if (rt.have_prev && rt.prev_time < lo && lo < t)
      rt.fn.push(lo, Interval::point(rt.prev_f), Interval::point(rt.prev_f));
  } else {
    rt.fn.pts().back().after = rt.fn.pts().back().at;
  }
  if (t <= hi) {
    rt.fn.push(t, fi, rt.fn.unknown());
  } else {
    rt.resolved = true;
  }
  rt.have_prev = true;
  rt.prev_time = t;
  rt.prev_f = f;
}

void TreeRuntime::update_bool(NodeRt& rt) {
  const NodeRt& l = nodes_[rt.left];
  // Entries below the previous frozen frontier never change; rebuild the
  // suffix only. The unoptimized mode rebuilds everything.
  const double resume = opts_.sliding_optimization ? rt.final_to : -kInf;
  rt.fn.truncate_from(resume);
  // Suffix start within a child: first entry at or after resume, with the
  // running segment value carried in from its predecessor.
  auto suffix_start = [&](const StepFun& g, std::size_t& idx, Interval& cur) {
    const auto& pts = g.pts();
    auto it = std::lower_bound(pts.begin(), pts.end(), resume,
                               [](const StepEntry& e, double t) { return e.t < t; });
    idx = static_cast<std::size_t>(it - pts.begin());
    cur = it == pts.begin() ? g.unknown() : std::prev(it)->after;
  };

  if (rt.ast->op == Op::Not) {
    std::size_t i = 0;
    Interval cur = l.fn.unknown();
    suffix_start(l.fn, i, cur);
    for (; i < l.fn.pts().size(); ++i) {
      const auto& p = l.fn.pts()[i];
      rt.fn.push(p.t, neg(p.at), neg(p.after));
    }
    rt.final_to = l.final_to;
    return;
  }
  const NodeRt& r = nodes_[rt.right];
  const bool is_max = rt.ast->op == Op::Or;
  auto comb = [&](const Interval& a, const Interval& b) {
    return is_max ? int_max(a, b) : int_min(a, b);
  };
  const auto& lp = l.fn.pts();
  const auto& rp = r.fn.pts();
  std::size_t i = 0;
  std::size_t j = 0;
  Interval lcur = l.fn.unknown();
  Interval rcur = r.fn.unknown();
  suffix_start(l.fn, i, lcur);
  suffix_start(r.fn, j, rcur);
  while (i < lp.size() || j < rp.size()) {
    double t;
    if (i < lp.size() && (j >= rp.size() || lp[i].t <= rp[j].t)) t = lp[i].t;
    else t = rp[j].t;
    Interval lat = lcur;
    Interval laft = lcur;
    if (i < lp.size() && lp[i].t == t) {
      lat = lp[i].at;
      laft = lp[i].after;
      lcur = laft;
      ++i;
    }
    Interval rat = rcur;
    Interval raft = rcur;
    if (j < rp.size() && rp[j].t == t) {
      rat = rp[j].at;
      raft = rp[j].after;
      rcur = raft;
      ++j;
    }
    rt.fn.push(t, comb(lat, rat), comb(laft, raft));
  }
  rt.final_to = std::min(l.final_to, r.final_to);
}

void TreeRuntime::update_temporal(NodeRt& rt) {
  const NodeRt& ch = nodes_[rt.left];
  const bool is_max = rt.ast->op == Op::Eventually;
  const double a = rt.ast->window->lo();
  const double b = rt.ast->window->hi();
  const double olo = rt.cover.lo();
  const double ohi = rt.cover.hi();
  const double frontier = ch.final_to - b;

  if (opts_.sliding_optimization && olo == ohi) {
    // Single-point cover: keep a running extremum over the final part of the
    // child's window and fold the still-volatile tail on top each step.
    const double l = olo + a;
    const double r = olo + b;
    Interval y = rt.fn.unknown();
    if (ch.final_to < l) {
      y = range_extremum(ch.fn, l, r, is_max);
    } else {
      if (!rt.acc_valid) {
        rt.acc = ch.fn.at(l);
        rt.acc_to = l;
        rt.acc_valid = true;
      }
      const double new_to = std::min(ch.final_to, r);
      if (new_to > rt.acc_to) {
        rt.acc = fold_open_closed(ch.fn, rt.acc_to, new_to, rt.acc, is_max);
        rt.acc_to = new_to;
      }
      y = rt.acc;
      if (rt.acc_to < r) y = fold_open_closed(ch.fn, rt.acc_to, r, y, is_max);
    }
    rt.fn.pts().clear();
    rt.fn.pts().push_back({olo, y, y});
    rt.final_to = frontier;
    return;
  }

  const double resume = opts_.sliding_optimization ? std::max(olo, rt.final_to) : olo;
  if (resume > ohi) {
    rt.final_to = frontier;
    return;
  }
  const auto suffix = sliding_extremum(ch.fn, a, b, resume, ohi, is_max);
  rt.fn.truncate_from(resume);
  for (const auto& e : suffix) rt.fn.push(e.t, e.at, e.after);
  rt.final_to = frontier;
}

Interval TreeRuntime::until_value(const NodeRt& rt, double tau) const {
  const StepFun& p = nodes_[rt.left].fn;
  const StepFun& q = nodes_[rt.right].fn;
  const double a = rt.ast->window->lo();
  const double b = rt.ast->window->hi();
  const double lo_t = tau + a;
  const double hi_t = tau + b;

  // Candidate tau2 points: window ends plus every child breakpoint strictly
  // inside, with midpoints for the open segments between them.
  std::vector<double> cands;
  cands.push_back(lo_t);
  if (hi_t > lo_t) cands.push_back(hi_t);
  auto collect = [&](const StepFun& g) {
    const auto& pts = g.pts();
    auto it = std::upper_bound(pts.begin(), pts.end(), lo_t,
                               [](double t, const StepEntry& e) { return t < e.t; });
    for (; it != pts.end() && it->t < hi_t; ++it) cands.push_back(it->t);
  };
  collect(p);
  collect(q);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<double> points;
  points.reserve(cands.size() * 2);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    points.push_back(cands[i]);
    if (i + 1 < cands.size()) {
      const double m = cands[i] + (cands[i + 1] - cands[i]) / 2.0;
      if (m > cands[i] && m < cands[i + 1]) points.push_back(m);
    }
  }

  // Running inf of the first child over the open interval (tau, tau2);
  // [+inf,+inf] is its value on the empty interval.
  Interval run_inf(kInf, kInf);
  if (tau < lo_t) {
    run_inf = int_min(run_inf, p.after(tau));
    const auto& pts = p.pts();
    auto it = std::upper_bound(pts.begin(), pts.end(), tau,
                               [](double t, const StepEntry& e) { return t < e.t; });
    for (; it != pts.end() && it->t < lo_t; ++it) {
      run_inf = int_min(run_inf, it->at);
      run_inf = int_min(run_inf, it->after);
    }
  }
  bool first = true;
  Interval best;
  double prev = 0.0;
  for (double c : points) {
    if (!first) {
      if (prev > tau) run_inf = int_min(run_inf, p.at(prev));
      run_inf = int_min(run_inf, p.after(prev));
    }
    const Interval cand = int_min(q.at(c), run_inf);
    best = first ? cand : int_max(best, cand);
    first = false;
    prev = c;
  }
  return best;
}

void TreeRuntime::update_until(NodeRt& rt) {
  const NodeRt& l = nodes_[rt.left];
  const NodeRt& r = nodes_[rt.right];
  const double b = rt.ast->window->hi();
  const double olo = rt.cover.lo();
  const double ohi = rt.cover.hi();
  const double frontier = std::min(l.final_to, r.final_to) - b;

  const double resume = opts_.sliding_optimization ? std::max(olo, rt.final_to) : olo;
  if (resume > ohi) {
    rt.final_to = frontier;
    return;
  }
  std::vector<double> positions;
  positions.push_back(resume);
  auto collect = [&](const StepFun& g) {
    const auto& pts = g.pts();
    for (double shift : {0.0, rt.ast->window->lo(), b}) {
      auto it = std::upper_bound(pts.begin(), pts.end(), resume + shift,
                                 [](double t, const StepEntry& e) { return t < e.t; });
      for (; it != pts.end(); ++it) {
        const double pos = it->t - shift;
        if (pos > ohi) break;
        if (pos > resume) positions.push_back(pos);
      }
    }
  };
  collect(l.fn);
  collect(r.fn);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  rt.fn.truncate_from(resume);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Interval at = until_value(rt, positions[i]);
    Interval after = at;
    // The value on the open segment past this position; the candidate set
    // has no breakpoints inside the gap, so one probe point is exact.
    double probe = positions[i];
    if (i + 1 < positions.size()) {
      probe = positions[i] + (positions[i + 1] - positions[i]) / 2.0;
      if (probe >= positions[i + 1]) probe = positions[i];
    } else if (std::isfinite(ohi) && positions[i] < ohi) {
      probe = positions[i] + (ohi - positions[i]) / 2.0;
    } else if (!std::isfinite(ohi)) {
      probe = positions[i] + 1.0;
    }
    if (probe > positions[i]) after = until_value(rt, probe);
    rt.fn.push(positions[i], at, after);
  }
  rt.final_to = frontier;
}

Interval TreeRuntime::value_at(double tau) const { return nodes_.back().fn.at(tau); }

double TreeRuntime::final_until() const { return nodes_.back().final_to; }

void TreeRuntime::drop_before(double t) {
  for (auto& rt : nodes_) rt.fn.drop_before(t + rt.cover.lo());
}

Interval TreeRuntime::value_of(const Node* n, double tau) const {
  auto it = index_.find(n);
  assert(it != index_.end());
  return nodes_[it->second].fn.at(tau);
}

std::size_t TreeRuntime::entries_of(const Node* n) const {
  auto it = index_.find(n);
  assert(it != index_.end());
  return nodes_[it->second].fn.pts().size();
}

std::size_t TreeRuntime::total_entries() const {
  std::size_t n = 0;
  for (const auto& rt : nodes_) n += rt.fn.pts().size();
  return n;
}

}  // namespace detail

BoundedMonitor::BoundedMonitor(Formula f, const std::map<std::string, Interval>& variable_bounds,
                               MonitorOptions opts)
    : tree_(std::move(f), variable_bounds, Interval(0.0, 0.0), opts) {
  if (!is_bounded(tree_.formula()))
    throw std::invalid_argument("bounded monitor requires a bounded formula");
  vars_ = variables_of(tree_.formula());
}

StepResult BoundedMonitor::step(const Sample& s) {
  if (decided()) return {rosi_, verdict_};
  if (seen_sample_ && s.time <= last_time_)
    throw InputError("sample times must be strictly increasing");
  for (const auto& var : vars_)
    if (!s.values.count(var)) throw InputError("sample is missing variable '" + var + "'");
  tree_.step(s);
  seen_sample_ = true;
  last_time_ = s.time;
  rosi_ = tree_.value_at(0.0);
  verdict_ = verdict_of(rosi_);
  return {rosi_, verdict_};
}

}  // namespace rosimon
