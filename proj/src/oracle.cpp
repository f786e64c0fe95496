#include "rosimon/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rosimon/opcount.hpp"

namespace rosimon::oracle {

namespace {

// Times at which a node's robustness signal (as a function of tau) can
// change value: sample times shifted back by every window-edge composition
// along the tree. A superset is fine; midpoints recover segment values.
void breakpoints(const Formula& f, const PartialSignal& sig,
                 std::map<const Node*, std::vector<double>>& out) {
  std::set<double> bp;
  switch (f->op) {
    case Op::Pred:
      for (const auto& s : sig.samples()) bp.insert(s.time);
      break;
    case Op::Not:
      breakpoints(f->left, sig, out);
      for (double t : out[f->left.get()]) bp.insert(t);
      break;
    case Op::And:
    case Op::Or:
      breakpoints(f->left, sig, out);
      breakpoints(f->right, sig, out);
      for (double t : out[f->left.get()]) bp.insert(t);
      for (double t : out[f->right.get()]) bp.insert(t);
      break;
    case Op::Always:
    case Op::Eventually:
      breakpoints(f->left, sig, out);
      for (double t : out[f->left.get()]) {
        bp.insert(t - f->window->lo());
        bp.insert(t - f->window->hi());
      }
      break;
    case Op::Until:
      breakpoints(f->left, sig, out);
      breakpoints(f->right, sig, out);
      for (const Formula* c : {&f->left, &f->right}) {
        for (double t : out[c->get()]) {
          bp.insert(t);
          bp.insert(t - f->window->lo());
          bp.insert(t - f->window->hi());
        }
      }
      break;
  }
  out[f.get()] = {bp.begin(), bp.end()};
}

// Candidate evaluation points for an extremum over [l, r] (or its interior):
// child breakpoints inside, the ends, and midpoints of the open gaps.
std::vector<double> candidates(const std::vector<double>& bp, double l, double r,
                               bool open_ends) {
  std::vector<double> pts;
  if (!open_ends) pts.push_back(l);
  auto it = std::upper_bound(bp.begin(), bp.end(), l);
  for (; it != bp.end() && *it < r; ++it) pts.push_back(*it);
  if (!open_ends && r > l) pts.push_back(r);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<double> with_mids;
  // Open-interval edges still contribute their adjacent segment values, so
  // seed midpoints against the ends as well.
  std::vector<double> rail;
  rail.push_back(l);
  rail.insert(rail.end(), pts.begin(), pts.end());
  if (r > l) rail.push_back(r);
  std::sort(rail.begin(), rail.end());
  rail.erase(std::unique(rail.begin(), rail.end()), rail.end());
  for (std::size_t i = 0; i < rail.size(); ++i) {
    with_mids.push_back(rail[i]);
    if (i + 1 < rail.size()) {
      const double m = rail[i] + (rail[i + 1] - rail[i]) / 2.0;
      if (m > rail[i] && m < rail[i + 1]) with_mids.push_back(m);
    }
  }
  if (open_ends) {
    std::vector<double> interior;
    for (double t : with_mids)
      if (t > l && t < r) interior.push_back(t);
    return interior;
  }
  return with_mids;
}

struct Evaluator {
  const PartialSignal& sig;
  std::map<const Node*, std::vector<double>> bp;

  Interval eval(const Formula& f, double tau) {
    switch (f->op) {
      case Op::Pred: {
        auto v = sig.value_at(tau);
        if (!v) return f->pred.range(sig.bounds());
        return Interval::point(f->pred.eval(*v));
      }
      case Op::Not:
        return neg(eval(f->left, tau));
      case Op::And:
        return int_min(eval(f->left, tau), eval(f->right, tau));
      case Op::Or:
        return int_max(eval(f->left, tau), eval(f->right, tau));
      case Op::Always:
      case Op::Eventually: {
        const bool is_max = f->op == Op::Eventually;
        const double l = tau + f->window->lo();
        const double r = tau + f->window->hi();
        Interval acc;
        bool first = true;
        for (double t : candidates(bp[f->left.get()], l, r, false)) {
          const Interval v = eval(f->left, t);
          acc = first ? v : (is_max ? int_max(acc, v) : int_min(acc, v));
          first = false;
        }
        assert(!first);
        return acc;
      }
      case Op::Until: {
        const double l = tau + f->window->lo();
        const double r = tau + f->window->hi();
        // The objective changes where either child's signal does.
        std::vector<double> merged = bp[f->right.get()];
        merged.insert(merged.end(), bp[f->left.get()].begin(), bp[f->left.get()].end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        Interval best;
        bool first = true;
        for (double t2 : candidates(merged, l, r, false)) {
          Interval inner(kInf, kInf);  // inf over the empty interval
          for (double t1 : candidates(bp[f->left.get()], tau, t2, true))
            inner = int_min(inner, eval(f->left, t1));
          const Interval cand = int_min(eval(f->right, t2), inner);
          best = first ? cand : int_max(best, cand);
          first = false;
        }
        assert(!first);
        return best;
      }
    }
    return Interval::universe();
  }
};

double scalar_value(const Formula& f, const PartialSignal& sig, double tau,
                    std::map<const Node*, std::vector<double>>& bp) {
  switch (f->op) {
    case Op::Pred: {
      // Complete-trace reading: constant interpolation extended past the
      // last sample.
      const double t = std::min(std::max(tau, sig.start_time()), sig.end_time());
      auto v = sig.value_at(t);
      assert(v);
      return f->pred.eval(*v);
    }
    case Op::Not:
      return -scalar_value(f->left, sig, tau, bp);
    case Op::And:
      return std::min(scalar_value(f->left, sig, tau, bp),
                      scalar_value(f->right, sig, tau, bp));
    case Op::Or:
      return std::max(scalar_value(f->left, sig, tau, bp),
                      scalar_value(f->right, sig, tau, bp));
    case Op::Always:
    case Op::Eventually: {
      const bool is_max = f->op == Op::Eventually;
      const double l = tau + f->window->lo();
      const double r = tau + f->window->hi();
      double acc = is_max ? -kInf : kInf;
      for (double t : candidates(bp[f->left.get()], l, r, false)) {
        const double v = scalar_value(f->left, sig, t, bp);
        acc = is_max ? std::max(acc, v) : std::min(acc, v);
      }
      return acc;
    }
    case Op::Until: {
      const double l = tau + f->window->lo();
      const double r = tau + f->window->hi();
      std::vector<double> merged = bp[f->right.get()];
      merged.insert(merged.end(), bp[f->left.get()].begin(), bp[f->left.get()].end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      double best = -kInf;
      for (double t2 : candidates(merged, l, r, false)) {
        double inner = kInf;
        for (double t1 : candidates(bp[f->left.get()], tau, t2, true))
          inner = std::min(inner, scalar_value(f->left, sig, t1, bp));
        best = std::max(best, std::min(scalar_value(f->right, sig, t2, bp), inner));
      }
      return best;
    }
  }
  return 0.0;
}

}  // namespace

OracleResult offline_rosi(const Formula& f, const PartialSignal& sig, double tau) {
  if (!is_bounded(f)) throw std::invalid_argument("offline_rosi requires a bounded formula");
  const std::uint64_t before = opcount::read();
  Evaluator ev{sig, {}};
  breakpoints(f, sig, ev.bp);
  const Interval r = ev.eval(f, tau);
  return {r, opcount::read() - before};
}

double robustness(const Formula& f, const PartialSignal& sig, double tau) {
  if (!is_bounded(f)) throw std::invalid_argument("robustness requires a bounded formula");
  if (sig.empty()) throw std::invalid_argument("robustness requires a non-empty signal");
  std::map<const Node*, std::vector<double>> bp;
  breakpoints(f, sig, bp);
  return scalar_value(f, sig, tau, bp);
}

Interval brute_untimed(UntimedShape shape, std::span<const Interval> p,
                       std::span<const Interval> q) {
  assert(!p.empty());
  const std::size_t n = p.size();
  auto max_over = [](Interval acc, const Interval& v, bool first) {
    return first ? v : int_max(acc, v);
  };
  auto min_over = [](Interval acc, const Interval& v, bool first) {
    return first ? v : int_min(acc, v);
  };
  Interval out;
  switch (shape) {
    case UntimedShape::Always: {
      for (std::size_t i = 0; i < n; ++i) out = min_over(out, p[i], i == 0);
      return out;
    }
    case UntimedShape::Eventually: {
      for (std::size_t i = 0; i < n; ++i) out = max_over(out, p[i], i == 0);
      return out;
    }
    case UntimedShape::Until: {
      assert(q.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = p[0];
        for (std::size_t j = 1; j <= i; ++j) inner = int_min(inner, p[j]);
        out = max_over(out, int_min(q[i], inner), i == 0);
      }
      return out;
    }
    case UntimedShape::AlwaysOrEventually: {
      assert(q.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = q[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_max(inner, q[j]);
        out = min_over(out, int_max(p[i], inner), i == 0);
      }
      return out;
    }
    case UntimedShape::EventuallyAndAlways: {
      assert(q.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = q[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_min(inner, q[j]);
        out = max_over(out, int_min(p[i], inner), i == 0);
      }
      return out;
    }
    case UntimedShape::AlwaysEventually: {
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = p[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_max(inner, p[j]);
        out = min_over(out, inner, i == 0);
      }
      return out;
    }
    case UntimedShape::EventuallyAlways: {
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = p[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_min(inner, p[j]);
        out = max_over(out, inner, i == 0);
      }
      return out;
    }
    case UntimedShape::EventuallyAndEventually: {
      assert(q.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = q[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_max(inner, q[j]);
        out = max_over(out, int_min(p[i], inner), i == 0);
      }
      return out;
    }
    case UntimedShape::AlwaysOrAlways: {
      assert(q.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        Interval inner = q[i];
        for (std::size_t j = i + 1; j < n; ++j) inner = int_min(inner, q[j]);
        out = min_over(out, int_max(p[i], inner), i == 0);
      }
      return out;
    }
    case UntimedShape::Unsupported:
      break;
  }
  throw std::invalid_argument("brute_untimed: unsupported class");
}

}  // namespace rosimon::oracle
