#include "rosimon/signal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace rosimon {

bool PartialSignal::append(Sample s) {
  if (!std::isfinite(s.time) || s.time < 0.0) return false;
  if (!samples_.empty() && s.time <= samples_.back().time) return false;
  if (!samples_.empty()) {
    // Every declared variable present in every sample.
    if (s.values.size() != samples_.front().values.size()) return false;
    for (const auto& [k, v] : samples_.front().values)
      if (!s.values.count(k)) return false;
  }
  samples_.push_back(std::move(s));
  return true;
}

std::optional<std::map<std::string, double>> PartialSignal::value_at(double t) const {
  if (samples_.empty() || t < samples_.front().time || t > samples_.back().time)
    return std::nullopt;
  // Last sample with time <= t; constant on [t_i, t_{i+1}).
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double a, const Sample& s) { return a < s.time; });
  --it;
  return it->values;
}

Interval PartialSignal::bound_of(const std::string& var) const {
  auto it = bounds_.find(var);
  if (it == bounds_.end()) return Interval::universe();
  return it->second;
}

namespace {

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : row) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.pop_back();
  }
  return out;
}

}  // namespace

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::string header;
  if (!std::getline(in_, header)) throw InputError("empty input, expected CSV header");
  ++line_;
  auto fields = split_csv(header);
  if (fields.empty() || fields[0] != "time")
    throw InputError("CSV header must start with 'time'", line_);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].empty()) throw InputError("empty variable name in header", line_);
    vars_.push_back(fields[i]);
  }
  if (vars_.empty()) throw InputError("CSV header declares no variables", line_);
}

std::optional<Sample> CsvReader::next() {
  std::string row;
  while (std::getline(in_, row)) {
    ++line_;
    if (row.empty() || row == "\r") continue;
    auto fields = split_csv(row);
    if (fields.size() != vars_.size() + 1)
      throw InputError("expected " + std::to_string(vars_.size() + 1) + " fields, got " +
                           std::to_string(fields.size()),
                       line_);
    Sample s;
    auto parse_num = [&](const std::string& f) {
      double v = 0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() || !std::isfinite(v))
        throw InputError("malformed number '" + f + "'", line_);
      return v;
    };
    s.time = parse_num(fields[0]);
    for (std::size_t i = 0; i < vars_.size(); ++i) s.values[vars_[i]] = parse_num(fields[i + 1]);
    return s;
  }
  return std::nullopt;
}

}  // namespace rosimon
