#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "rosimon/opcount.hpp"

namespace rosimon {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval over the extended reals. The value space of every
/// robustness computation: a singular interval [a,a] is an exactly known
/// value, a wider one bounds all values still compatible with the data.
///
/// The empty interval is a dedicated state (canonically [+inf,-inf]) and is
/// produced only by intersect(); the monitoring semantics never feeds empty
/// intervals into the arithmetic ops.
class Interval {
 public:
  /// Default-constructed interval is the whole line (-inf, +inf).
  constexpr Interval() : lo_(-kInf), hi_(kInf) {}
  constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    assert(!(lo == lo && hi == hi) || lo <= hi || (lo == kInf && hi == -kInf));
  }

  static constexpr Interval empty() { return Interval(kInf, -kInf, EmptyTag{}); }
  static constexpr Interval point(double v) { return Interval(v, v); }
  static constexpr Interval universe() { return Interval(-kInf, kInf); }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }

  constexpr bool is_empty() const { return lo_ > hi_; }
  constexpr bool is_singular() const { return lo_ == hi_; }
  constexpr bool is_finite() const {
    return !is_empty() && std::isfinite(lo_) && std::isfinite(hi_);
  }

  /// Containment order: *this ⊆ other.
  constexpr bool contained_in(const Interval& other) const {
    if (is_empty()) return true;
    if (other.is_empty()) return false;
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  constexpr bool contains(double v) const {
    return !is_empty() && lo_ <= v && v <= hi_;
  }

  friend constexpr bool operator==(const Interval& a, const Interval& b) {
    if (a.is_empty() && b.is_empty()) return true;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  struct EmptyTag {};
  constexpr Interval(double lo, double hi, EmptyTag) : lo_(lo), hi_(hi) {}

  double lo_;
  double hi_;
};

/// -I = [-hi, -lo]. Empty maps to empty.
inline Interval neg(const Interval& i) {
  opcount::bump();
  if (i.is_empty()) return Interval::empty();
  return Interval(-i.hi(), -i.lo());
}

/// c + I, endpointwise; +-inf endpoints absorb the shift.
inline Interval add_scalar(double c, const Interval& i) {
  opcount::bump();
  if (i.is_empty()) return Interval::empty();
  assert(std::isfinite(c));
  return Interval(c + i.lo(), c + i.hi());
}

/// Minkowski sum, endpointwise. Only ever applied where no (-inf)+(+inf)
/// can arise (time windows have finite lower ends); asserted.
inline Interval minkowski_sum(const Interval& a, const Interval& b) {
  opcount::bump();
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  assert(!(a.lo() == -kInf && b.lo() == kInf) && !(a.lo() == kInf && b.lo() == -kInf));
  assert(!(a.hi() == -kInf && b.hi() == kInf) && !(a.hi() == kInf && b.hi() == -kInf));
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

/// Componentwise minimum: the interval extension of min over the reals.
inline Interval int_min(const Interval& a, const Interval& b) {
  opcount::bump();
  assert(!a.is_empty() && !b.is_empty());
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

/// Componentwise maximum, the dual of int_min via neg.
inline Interval int_max(const Interval& a, const Interval& b) {
  opcount::bump();
  assert(!a.is_empty() && !b.is_empty());
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

/// Set intersection; empty when the intervals do not overlap.
inline Interval intersect(const Interval& a, const Interval& b) {
  opcount::bump();
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (hi < lo) return Interval::empty();
  return Interval(lo, hi);
}

/// Renders as "[lo, hi]" with "inf"/"-inf" tokens; finite endpoints use the
/// shortest digits that round-trip exactly. Empty renders as "[]".
std::string to_string(const Interval& i);

/// Inverse of to_string; nullopt on malformed text.
std::optional<Interval> parse_interval(std::string_view text);

}  // namespace rosimon
