#include "rosimon/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace rosimon {

namespace {

Interval window_or_untimed(const Node& n) {
  if (n.window) return *n.window;
  return Interval(0.0, kInf);
}

void horizons_rec(const Formula& f, const Interval& hor, HorizonMap& out) {
  if (!f) return;
  out[f.get()] = hor;
  Interval child_hor = hor;
  if (is_temporal(f->op)) child_hor = minkowski_sum(window_or_untimed(*f), hor);
  horizons_rec(f->left, child_hor, out);
  horizons_rec(f->right, child_hor, out);
}

double sup_over_tree(const Formula& f, const Interval& hor) {
  if (!f) return -kInf;
  Interval child_hor = hor;
  if (is_temporal(f->op)) child_hor = minkowski_sum(window_or_untimed(*f), hor);
  double m = hor.hi();
  m = std::max(m, sup_over_tree(f->left, child_hor));
  m = std::max(m, sup_over_tree(f->right, child_hor));
  return m;
}

void max_last_of_proper_subs(const Formula& f, bool is_root, double& w, bool& unbounded) {
  if (!f) return;
  if (!is_root) {
    if (!is_bounded(f)) unbounded = true;
    w = std::max(w, last_offset(f));
  }
  max_last_of_proper_subs(f->left, false, w, unbounded);
  max_last_of_proper_subs(f->right, false, w, unbounded);
}

bool untimed(const Formula& f, Op op) { return f && f->op == op && !f->window; }

}  // namespace

HorizonMap compute_horizons(const Formula& f) {
  HorizonMap out;
  horizons_rec(f, Interval(0.0, 0.0), out);
  return out;
}

double last_offset(const Formula& f) {
  // sup(hor) over proper subformulas = max over the children's subtrees,
  // with each child's horizon seeded from the root's window.
  Interval child_hor(0.0, 0.0);
  if (is_temporal(f->op)) child_hor = window_or_untimed(*f);
  double m = -kInf;
  m = std::max(m, sup_over_tree(f->left, child_hor));
  m = std::max(m, sup_over_tree(f->right, child_hor));
  if (m == -kInf) return 0.0;  // bare predicate: no proper subformula
  return m;
}

UntimedClass classify_untimed(const Formula& f) {
  if (untimed(f, Op::Until)) return {UntimedShape::Until, f->left, f->right};
  if (untimed(f, Op::Always)) {
    const Formula& c = f->left;
    if (untimed(c, Op::Eventually)) return {UntimedShape::AlwaysEventually, c->left, nullptr};
    if (c && c->op == Op::Or) {
      if (untimed(c->right, Op::Eventually))
        return {UntimedShape::AlwaysOrEventually, c->left, c->right->left};
      if (untimed(c->left, Op::Eventually))
        return {UntimedShape::AlwaysOrEventually, c->right, c->left->left};
      if (untimed(c->right, Op::Always))
        return {UntimedShape::AlwaysOrAlways, c->left, c->right->left};
      if (untimed(c->left, Op::Always))
        return {UntimedShape::AlwaysOrAlways, c->right, c->left->left};
    }
    return {UntimedShape::Always, c, nullptr};
  }
  if (untimed(f, Op::Eventually)) {
    const Formula& c = f->left;
    if (untimed(c, Op::Always)) return {UntimedShape::EventuallyAlways, c->left, nullptr};
    if (c && c->op == Op::And) {
      if (untimed(c->right, Op::Always))
        return {UntimedShape::EventuallyAndAlways, c->left, c->right->left};
      if (untimed(c->left, Op::Always))
        return {UntimedShape::EventuallyAndAlways, c->right, c->left->left};
      if (untimed(c->right, Op::Eventually))
        return {UntimedShape::EventuallyAndEventually, c->left, c->right->left};
      if (untimed(c->left, Op::Eventually))
        return {UntimedShape::EventuallyAndEventually, c->right, c->left->left};
    }
    return {UntimedShape::Eventually, c, nullptr};
  }
  return {UntimedShape::Unsupported, nullptr, nullptr};
}

const char* to_string(UntimedShape s) {
  switch (s) {
    case UntimedShape::Always: return "G phi";
    case UntimedShape::Eventually: return "F phi";
    case UntimedShape::Until: return "phi U psi";
    case UntimedShape::AlwaysOrEventually: return "G(phi or F psi)";
    case UntimedShape::EventuallyAndAlways: return "F(phi and G psi)";
    case UntimedShape::AlwaysEventually: return "G F phi";
    case UntimedShape::EventuallyAlways: return "F G phi";
    case UntimedShape::EventuallyAndEventually: return "F(phi and F psi)";
    case UntimedShape::AlwaysOrAlways: return "G(phi or G psi)";
    case UntimedShape::Unsupported: return "unsupported";
  }
  return "unsupported";
}

int sample_buffer_bound(const Formula& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  double w = 0.0;
  bool unbounded = false;
  max_last_of_proper_subs(f, true, w, unbounded);
  if (unbounded) throw std::invalid_argument("formula has an unbounded proper subformula");
  return static_cast<int>(std::ceil(w / delta));
}

}  // namespace rosimon
