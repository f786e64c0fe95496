#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosimon/interval.hpp"

namespace rosimon {

/// One timed multi-variable sample.
struct Sample {
  double time = 0.0;
  std::map<std::string, double> values;
};

/// Malformed streaming input: non-monotone times, bad CSV rows, minimum-gap
/// violations. Carries the offending line when it came from a file.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Timed sample store with piecewise-constant interpolation. The observed
/// prefix of a trace: value_at(t) is the sample active at t for t in
/// [t0, tn], and unknown beyond the last sample (the caller substitutes the
/// per-variable bounds).
class PartialSignal {
 public:
  PartialSignal() = default;
  explicit PartialSignal(std::map<std::string, Interval> variable_bounds)
      : bounds_(std::move(variable_bounds)) {}

  /// Appends one sample. Returns false (and leaves the signal unchanged)
  /// when the time does not strictly increase or is negative.
  bool append(Sample s);

  /// Interpolated values at t, or nullopt outside [t0, tn].
  std::optional<std::map<std::string, double>> value_at(double t) const;

  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  const std::vector<Sample>& samples() const { return samples_; }
  double start_time() const { return samples_.front().time; }
  double end_time() const { return samples_.back().time; }

  /// Declared range of a variable; (-inf, +inf) when not tightened.
  Interval bound_of(const std::string& var) const;
  const std::map<std::string, Interval>& bounds() const { return bounds_; }
  void set_bound(const std::string& var, Interval b) { bounds_[var] = b; }

 private:
  std::vector<Sample> samples_;
  std::map<std::string, Interval> bounds_;
};

/// Streaming CSV reader for the `time,<var1>,<var2>,...` format: one row per
/// sample, strictly increasing time column, decimal floats.
class CsvReader {
 public:
  /// Reads and validates the header row. Throws InputError on a malformed or
  /// missing header.
  explicit CsvReader(std::istream& in);

  /// Next sample, or nullopt at end of input. Throws InputError (with line
  /// number) on malformed rows; time monotonicity is the appender's job.
  std::optional<Sample> next();

  const std::vector<std::string>& variables() const { return vars_; }
  long line() const { return line_; }

 private:
  std::istream& in_;
  std::vector<std::string> vars_;
  long line_ = 0;
};

}  // namespace rosimon
