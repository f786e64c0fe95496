#include <doctest.h>

#include <random>

#include "rosimon/oracle.hpp"
#include "rosimon/parser.hpp"
#include "support/generators.hpp"

using namespace rosimon;

namespace {

PartialSignal from(const std::vector<Sample>& trace,
                   std::map<std::string, Interval> bounds = {}) {
  PartialSignal sig(std::move(bounds));
  for (const auto& s : trace) REQUIRE(sig.append(s));
  return sig;
}

Sample mk(double t, double x) {
  Sample s;
  s.time = t;
  s.values["x"] = x;
  return s;
}

}  // namespace

TEST_CASE("predicate base case") {
  const auto sig = from({mk(0, 3)});
  const auto r = oracle::offline_rosi(parse_formula("x > 0"), sig, 0.0);
  CHECK(r.rosi == Interval(3, 3));
  CHECK(r.evals > 0);
}

TEST_CASE("always over an unknown future uses the variable bounds") {
  const auto sig = from({mk(0, 3)}, {{"x", Interval(-5, 5)}});
  const auto r = oracle::offline_rosi(parse_formula("G[0,1](x > 0)"), sig, 0.0);
  CHECK(r.rosi.lo() == -5);
  CHECK(r.rosi == Interval(-5, 3));
}

TEST_CASE("oracle determinism") {
  const auto sig = from({mk(0, 1), mk(1, -2), mk(2, 4)});
  const Formula f = parse_formula("F[0,1.5](x > 0) and G[0,0.5](x < 3)");
  const auto a = oracle::offline_rosi(f, sig, 0.0);
  const auto b = oracle::offline_rosi(f, sig, 0.0);
  CHECK(a.rosi == b.rosi);
}

TEST_CASE("complete signals give the singular scalar robustness") {
  std::mt19937 rng(53);
  const std::vector<std::string> vars = {"x", "y"};
  int checked = 0;
  for (int n = 0; n < 150; ++n) {
    const Formula f = testgen::random_bounded_formula(rng, vars, 3);
    const double need = last_offset(f);
    auto trace = testgen::random_trace(rng, vars, 30);
    if (trace.back().time <= need + 0.5) continue;  // horizon not covered
    const auto sig = from(trace);
    const auto rosi = oracle::offline_rosi(f, sig, 0.0).rosi;
    REQUIRE(rosi.is_singular());
    CHECK(rosi.lo() == oracle::robustness(f, sig, 0.0));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("brute untimed expansions") {
  using oracle::brute_untimed;
  auto I = [](double v) { return Interval::point(v); };
  const std::vector<Interval> p = {I(1), I(2), I(0.5)};
  const std::vector<Interval> q = {I(-1), I(3), I(-2)};
  CHECK(brute_untimed(UntimedShape::Until, p, q) == I(1));
  // Suffix-max of a sorted-increasing sequence collapses to the last value.
  const std::vector<Interval> inc = {I(1), I(2), I(3), I(4)};
  CHECK(brute_untimed(UntimedShape::AlwaysEventually, inc, {}) == I(4));
  const std::vector<Interval> single = {I(5)};
  CHECK(brute_untimed(UntimedShape::Always, single, {}) == I(5));
  CHECK(brute_untimed(UntimedShape::Always, p, {}) == I(0.5));
  CHECK(brute_untimed(UntimedShape::Eventually, p, {}) == I(2));
  // always(p or eventually q).
  const std::vector<Interval> p2 = {I(-1), I(2)};
  const std::vector<Interval> q2 = {I(1), I(-3)};
  CHECK(brute_untimed(UntimedShape::AlwaysOrEventually, p2, q2) == I(1));
  // eventually(p and eventually q).
  const std::vector<Interval> p3 = {I(1), I(-1)};
  const std::vector<Interval> q3 = {I(-2), I(3)};
  CHECK(brute_untimed(UntimedShape::EventuallyAndEventually, p3, q3) == I(1));
}
