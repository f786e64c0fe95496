#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "rosimon/engine_bounded.hpp"

namespace rosimon::cli {

/// Exit codes: verdicts map onto 0/1/2 so harnesses can branch without
/// parsing output; >= 64 are usage/format failures.
inline constexpr int kExitSatisfied = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitUnsupported = 66;

struct RunConfig {
  std::string formula_text;  // exactly one of formula_text / formula_file
  std::string formula_file;
  std::string input_path = "-";  // "-" reads the stream handed to run()
  std::map<std::string, Interval> bounds;
  std::optional<double> delta;
  bool early_stop = true;
  bool final_only = false;
  MonitorOptions monitor;
};

/// Parses a --bound argument of the form VAR=LO,HI ("inf"/"-inf" allowed).
std::optional<std::pair<std::string, Interval>> parse_bound(const std::string& arg);

/// Streams CSV samples through the right monitor, emitting one JSON record
/// per step -- {"time": ..., "rosi": [lo, hi], "verdict": ...} -- and a
/// final summary {"consumed": n, "available": m, "verdict": ...}. Stops at
/// the first permanently decided verdict when early_stop is set. Returns an
/// exit code.
int run(const RunConfig& cfg, std::istream& stdin_stream, std::ostream& out, std::ostream& err);

}  // namespace rosimon::cli
