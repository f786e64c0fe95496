#include "rosimon/formula.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <set>

#include "rosimon/opcount.hpp"

namespace rosimon {

double Predicate::eval(const std::map<std::string, double>& values) const {
  opcount::bump();
  double acc = constant;
  for (const auto& [var, c] : coeffs) {
    auto it = values.find(var);
    assert(it != values.end() && "predicate variable missing from sample");
    acc += c * it->second;
  }
  return acc;
}

Interval Predicate::range(const std::map<std::string, Interval>& variable_bounds) const {
  double lo = constant;
  double hi = constant;
  auto scaled = [](double c, double v) -> double {
    if (std::isinf(v)) return c > 0 ? v : -v;  // c is never 0 in coeffs
    return c * v;
  };
  for (const auto& [var, c] : coeffs) {
    auto it = variable_bounds.find(var);
    Interval b = it == variable_bounds.end() ? Interval::universe() : it->second;
    const double a = scaled(c, c > 0 ? b.lo() : b.hi());
    const double z = scaled(c, c > 0 ? b.hi() : b.lo());
    lo += a;
    hi += z;
  }
  return Interval(lo, hi);
}

namespace {

Formula node(Node n) { return std::make_shared<const Node>(std::move(n)); }

void check_window(const std::optional<Interval>& w) {
  if (!w) return;
  assert(w->lo() >= 0.0 && w->lo() <= w->hi() && std::isfinite(w->hi()));
}

}  // namespace

Formula make_pred(Predicate p) {
  assert(!p.coeffs.empty());
  Node n;
  n.op = Op::Pred;
  n.pred = std::move(p);
  return node(std::move(n));
}

Formula make_not(Formula f) {
  Node n;
  n.op = Op::Not;
  n.left = std::move(f);
  return node(std::move(n));
}

Formula make_and(Formula l, Formula r) {
  Node n;
  n.op = Op::And;
  n.left = std::move(l);
  n.right = std::move(r);
  return node(std::move(n));
}

Formula make_or(Formula l, Formula r) {
  Node n;
  n.op = Op::Or;
  n.left = std::move(l);
  n.right = std::move(r);
  return node(std::move(n));
}

Formula make_always(std::optional<Interval> window, Formula f) {
  check_window(window);
  Node n;
  n.op = Op::Always;
  n.window = window;
  n.left = std::move(f);
  return node(std::move(n));
}

Formula make_eventually(std::optional<Interval> window, Formula f) {
  check_window(window);
  Node n;
  n.op = Op::Eventually;
  n.window = window;
  n.left = std::move(f);
  return node(std::move(n));
}

Formula make_until(std::optional<Interval> window, Formula l, Formula r) {
  check_window(window);
  Node n;
  n.op = Op::Until;
  n.window = window;
  n.left = std::move(l);
  n.right = std::move(r);
  return node(std::move(n));
}

bool is_bounded(const Formula& f) {
  if (!f) return true;
  if (is_temporal(f->op) && !f->window) return false;
  return is_bounded(f->left) && is_bounded(f->right);
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->op == Op::Pred)
    for (const auto& [v, c] : f->pred.coeffs) out.insert(v);
  collect_vars(f->left, out);
  collect_vars(f->right, out);
}

void append_num(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::string render_pred(const Predicate& p) {
  std::string out;
  bool first = true;
  for (const auto& [var, c] : p.coeffs) {
    if (first) {
      if (c < 0) out += "- ";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const double mag = std::fabs(c);
    if (mag != 1.0) {
      append_num(out, mag);
      out += "*";
    }
    out += var;
    first = false;
  }
  out += " > ";
  append_num(out, -p.constant);
  return out;
}

std::string wrap(const Formula& f) {
  std::string s = render(f);
  if (f->op == Op::Pred) return s;
  return "(" + s + ")";
}

std::string render_window(const std::optional<Interval>& w) {
  if (!w) return "";
  std::string out = "[";
  append_num(out, w->lo());
  out += ",";
  append_num(out, w->hi());
  out += "]";
  return out;
}

}  // namespace

std::vector<std::string> variables_of(const Formula& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

std::string render(const Formula& f) {
  assert(f);
  switch (f->op) {
    case Op::Pred:
      return render_pred(f->pred);
    case Op::Not:
      return "not " + wrap(f->left);
    case Op::And:
      return wrap(f->left) + " and " + wrap(f->right);
    case Op::Or:
      return wrap(f->left) + " or " + wrap(f->right);
    case Op::Always:
      return "G" + render_window(f->window) + " " + wrap(f->left);
    case Op::Eventually:
      return "F" + render_window(f->window) + " " + wrap(f->left);
    case Op::Until:
      return wrap(f->left) + " U" + render_window(f->window) + " " + wrap(f->right);
  }
  return {};
}

}  // namespace rosimon
