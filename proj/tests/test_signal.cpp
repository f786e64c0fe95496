#include <doctest.h>

#include <sstream>

#include "rosimon/signal.hpp"

using namespace rosimon;

namespace {

Sample mk(double t, double x) {
  Sample s;
  s.time = t;
  s.values["x"] = x;
  return s;
}

}  // namespace

TEST_CASE("append enforces strictly increasing time") {
  PartialSignal sig;
  CHECK(sig.append(mk(0, 1)));
  CHECK(sig.size() == 1);
  CHECK(!sig.append(mk(0, 2)));
  CHECK(sig.size() == 1);
  CHECK(sig.append(mk(0.5, 3)));
  CHECK(sig.value_at(0.25)->at("x") == 1);
}

TEST_CASE("constant interpolation") {
  PartialSignal sig;
  sig.append(mk(0, 1));
  sig.append(mk(1, 5));
  CHECK(sig.value_at(0.5)->at("x") == 1);
  CHECK(sig.value_at(1.0)->at("x") == 5);  // value at the last sample time
  CHECK(!sig.value_at(1.5).has_value());   // beyond the data: unknown
  CHECK(!sig.value_at(-0.5).has_value());
}

TEST_CASE("value_at is constant across each segment") {
  PartialSignal sig;
  sig.append(mk(0, 1));
  sig.append(mk(2, -3));
  sig.append(mk(2.5, 7));
  for (double t : {2.0, 2.1, 2.25, 2.4999}) CHECK(sig.value_at(t)->at("x") == -3);
}

TEST_CASE("variable bounds default to unbounded") {
  PartialSignal sig;
  CHECK(sig.bound_of("x") == Interval::universe());
  sig.set_bound("x", Interval(-5, 5));
  CHECK(sig.bound_of("x") == Interval(-5, 5));
}

TEST_CASE("appends require a uniform variable set") {
  PartialSignal sig;
  CHECK(sig.append(mk(0, 1)));
  Sample bad;
  bad.time = 1;
  bad.values["y"] = 2;
  CHECK(!sig.append(bad));
}

TEST_CASE("csv reading") {
  std::istringstream in("time,x,y\n0,1,-1\n1,3,2\n");
  CsvReader r(in);
  CHECK(r.variables() == std::vector<std::string>{"x", "y"});
  auto s0 = r.next();
  REQUIRE(s0.has_value());
  CHECK(s0->time == 0);
  CHECK(s0->values.at("y") == -1);
  auto s1 = r.next();
  REQUIRE(s1.has_value());
  CHECK(s1->values.at("x") == 3);
  CHECK(!r.next().has_value());
}

TEST_CASE("csv errors carry line numbers") {
  std::istringstream in("time,x\n0,1\noops,2\n");
  CsvReader r(in);
  r.next();
  try {
    r.next();
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("csv requires a time-led header") {
  std::istringstream in("x,y\n0,1\n");
  CHECK_THROWS_AS(CsvReader{in}, InputError);
  std::istringstream empty("");
  CHECK_THROWS_AS(CsvReader{empty}, InputError);
}
