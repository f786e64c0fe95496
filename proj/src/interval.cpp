#include "rosimon/interval.hpp"

#include <charconv>
#include <cstdio>

namespace rosimon {

namespace {

void append_endpoint(std::string& out, double v) {
  if (v == kInf) {
    out += "inf";
    return;
  }
  if (v == -kInf) {
    out += "-inf";
    return;
  }
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::optional<double> parse_endpoint(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok == "inf") return kInf;
  if (tok == "-inf") return -kInf;
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(const Interval& i) {
  if (i.is_empty()) return "[]";
  std::string out = "[";
  append_endpoint(out, i.lo());
  out += ", ";
  append_endpoint(out, i.hi());
  out += "]";
  return out;
}

std::optional<Interval> parse_interval(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return Interval::empty();
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto lo = parse_endpoint(body.substr(0, comma));
  auto hi = parse_endpoint(body.substr(comma + 1));
  if (!lo || !hi) return std::nullopt;
  if (*lo > *hi) return std::nullopt;
  return Interval(*lo, *hi);
}

}  // namespace rosimon
