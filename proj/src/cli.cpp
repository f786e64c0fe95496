#include "rosimon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "rosimon/analysis.hpp"
#include "rosimon/engine_untimed.hpp"
#include "rosimon/parser.hpp"

namespace rosimon::cli {

namespace {

using json = nlohmann::ordered_json;

json endpoint_json(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

json rosi_json(const Interval& i) { return json::array({endpoint_json(i.lo()), endpoint_json(i.hi())}); }

std::optional<double> parse_endpoint(const std::string& tok) {
  if (tok == "inf") return kInf;
  if (tok == "-inf") return -kInf;
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

// Either engine behind one surface.
struct AnyMonitor {
  std::unique_ptr<BoundedMonitor> bounded;
  std::unique_ptr<UntimedMonitor> untimed;

  StepResult step(const Sample& s) { return bounded ? bounded->step(s) : untimed->step(s); }
  bool decided() const { return bounded ? bounded->decided() : untimed->decided(); }
  Verdict verdict() const { return bounded ? bounded->verdict() : untimed->verdict(); }
};

}  // namespace

std::optional<std::pair<std::string, Interval>> parse_bound(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) return std::nullopt;
  const auto comma = arg.find(',', eq + 1);
  if (comma == std::string::npos) return std::nullopt;
  auto lo = parse_endpoint(arg.substr(eq + 1, comma - eq - 1));
  auto hi = parse_endpoint(arg.substr(comma + 1));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(arg.substr(0, eq), Interval(*lo, *hi));
}

int run(const RunConfig& cfg, std::istream& stdin_stream, std::ostream& out, std::ostream& err) {
  // Formula source.
  std::string text = cfg.formula_text;
  if (!cfg.formula_file.empty()) {
    if (!text.empty()) {
      err << "error: pass either a formula string or a formula file, not both\n";
      return kExitUsage;
    }
    std::ifstream ff(cfg.formula_file);
    if (!ff) {
      err << "error: cannot open formula file '" << cfg.formula_file << "'\n";
      return kExitUsage;
    }
    std::stringstream ss;
    ss << ff.rdbuf();
    text = ss.str();
  }
  if (text.empty()) {
    err << "error: no formula given\n";
    return kExitUsage;
  }

  Formula formula;
  try {
    formula = parse_formula(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // Input source.
  std::ifstream file_in;
  std::istream* in = &stdin_stream;
  if (cfg.input_path != "-") {
    file_in.open(cfg.input_path);
    if (!file_in) {
      err << "error: cannot open input '" << cfg.input_path << "'\n";
      return kExitUsage;
    }
    in = &file_in;
  }
  while (in->peek() == '\n' || in->peek() == '\r' || in->peek() == ' ' || in->peek() == '\t')
    in->get();
  if (in->peek() == std::char_traits<char>::eof()) {
    err << "error: empty input\n";
    return kExitUsage;
  }

  // Route to an engine.
  AnyMonitor mon;
  try {
    if (is_bounded(formula)) {
      mon.bounded = std::make_unique<BoundedMonitor>(formula, cfg.bounds, cfg.monitor);
    } else {
      const auto cls = classify_untimed(formula);
      if (cls.shape == UntimedShape::Unsupported) {
        err << "error: unsupported untimed formula shape (supported: G/F/U skeletons and "
               "their listed combinations)\n";
        return kExitUnsupported;
      }
      mon.untimed =
          std::make_unique<UntimedMonitor>(formula, cfg.bounds, cfg.delta, cfg.monitor);
    }
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    err << "error: " << msg << "\n";
    return msg.find("delta") != std::string::npos ? kExitUsage : kExitUnsupported;
  }

  try {
    CsvReader reader(*in);
    for (const auto& var : variables_of(formula)) {
      if (std::find(reader.variables().begin(), reader.variables().end(), var) ==
          reader.variables().end()) {
        err << "error: formula variable '" << var << "' not in CSV header\n";
        return kExitUsage;
      }
    }

    long consumed = 0;
    long available = 0;
    double prev_time = 0.0;
    bool seen = false;
    while (auto s = reader.next()) {
      if (seen && s->time <= prev_time)
        throw InputError("time column must be strictly increasing", reader.line());
      prev_time = s->time;
      seen = true;
      ++available;
      if (cfg.early_stop && mon.decided()) continue;  // count remaining rows only

      StepResult res;
      try {
        res = mon.step(*s);
      } catch (const InputError& e) {
        throw InputError(e.what(), reader.line());
      }
      ++consumed;
      if (!cfg.final_only) {
        json rec;
        rec["time"] = s->time;
        rec["rosi"] = rosi_json(res.rosi);
        rec["verdict"] = to_string(res.verdict);
        out << rec.dump() << "\n";
      }
    }
    if (!seen) {
      err << "error: empty input\n";
      return kExitUsage;
    }

    json summary;
    summary["consumed"] = consumed;
    summary["available"] = available;
    summary["verdict"] = to_string(mon.verdict());
    out << summary.dump() << "\n";

    switch (mon.verdict()) {
      case Verdict::Satisfied: return kExitSatisfied;
      case Verdict::Falsified: return kExitFalsified;
      case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace rosimon::cli
