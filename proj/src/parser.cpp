#include "rosimon/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

namespace rosimon {

namespace {

enum class Tok { Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Plus, Minus, Star, Lt, Gt, Le, Ge, End };

struct Token {
  Tok kind;
  std::string text;
  double num = 0.0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokens_ = lex(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  std::vector<Token> lex() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        out.push_back(lex_number(i));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = i;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
          ++i;
        out.push_back({Tok::Ident, std::string(text_.substr(start, i - start)), 0.0, start});
        continue;
      }
      auto sym = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(text_.substr(i, len)), 0.0, i});
        i += len;
      };
      switch (c) {
        case '(': sym(Tok::LParen, 1); break;
        case ')': sym(Tok::RParen, 1); break;
        case '[': sym(Tok::LBracket, 1); break;
        case ']': sym(Tok::RBracket, 1); break;
        case ',': sym(Tok::Comma, 1); break;
        case '+': sym(Tok::Plus, 1); break;
        case '-': sym(Tok::Minus, 1); break;
        case '*': sym(Tok::Star, 1); break;
        case '<': sym(i + 1 < text_.size() && text_[i + 1] == '=' ? Tok::Le : Tok::Lt,
                      i + 1 < text_.size() && text_[i + 1] == '=' ? 2 : 1);
                  break;
        case '>': sym(i + 1 < text_.size() && text_[i + 1] == '=' ? Tok::Ge : Tok::Gt,
                      i + 1 < text_.size() && text_[i + 1] == '=' ? 2 : 1);
                  break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
    }
    out.push_back({Tok::End, "", 0.0, text_.size()});
    return out;
  }

  Token lex_number(std::size_t& i) {
    const std::size_t start = i;
    while (i < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i])) || text_[i] == '.'))
      ++i;
    // Scientific suffix: e or E, optional sign, digits.
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        ++j;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        i = j;
      }
    }
    std::string_view s = text_.substr(start, i - start);
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
      throw ParseError("malformed number '" + std::string(s) + "'", start);
    return {Tok::Number, std::string(s), v, start};
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

bool is_keyword(const Token& t, const char* kw) {
  return t.kind == Tok::Ident && t.text == kw;
}

// Raw atom before abs desugaring: linear part, plus at most one abs term.
struct RawAtom {
  Predicate linear;
  std::string abs_var;
  double abs_coeff = 0.0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = implication();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const auto& ts = lex_.tokens();
    return ts[std::min(idx_ + ahead, ts.size() - 1)];
  }
  const Token& advance() { return lex_.tokens()[idx_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(what, peek().pos);
    advance();
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }
  bool accept_kw(const char* kw) {
    if (!is_keyword(peek(), kw)) return false;
    advance();
    return true;
  }

  Formula implication() {
    Formula l = disj();
    if (accept_kw("implies")) {
      Formula r = implication();
      return make_or(make_not(std::move(l)), std::move(r));
    }
    return l;
  }

  Formula disj() {
    Formula f = conj();
    while (accept_kw("or")) f = make_or(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = until_level();
    while (accept_kw("and")) f = make_and(std::move(f), until_level());
    return f;
  }

  Formula until_level() {
    Formula l = unary();
    if (is_keyword(peek(), "U") || is_keyword(peek(), "until")) {
      advance();
      auto w = maybe_window();
      Formula r = until_level();
      return make_until(w, std::move(l), std::move(r));
    }
    return l;
  }

  Formula unary() {
    if (accept_kw("not")) return make_not(unary());
    if (is_keyword(peek(), "G") || is_keyword(peek(), "alw")) {
      advance();
      auto w = maybe_window();
      return make_always(w, unary());
    }
    if (is_keyword(peek(), "F") || is_keyword(peek(), "ev")) {
      advance();
      auto w = maybe_window();
      return make_eventually(w, unary());
    }
    if (accept(Tok::LParen)) {
      Formula f = implication();
      expect(Tok::RParen, "expected ')'");
      return f;
    }
    return atom();
  }

  std::optional<Interval> maybe_window() {
    if (peek().kind != Tok::LBracket) return std::nullopt;
    const std::size_t pos = peek().pos;
    advance();
    const double lo = window_number();
    expect(Tok::Comma, "expected ',' in window");
    const double hi = window_number();
    expect(Tok::RBracket, "expected ']'");
    if (lo < 0.0) throw ParseError("window lower bound must be >= 0", pos);
    if (lo > hi) throw ParseError("window lower bound exceeds upper bound", pos);
    return Interval(lo, hi);
  }

  double window_number() {
    if (peek().kind != Tok::Number) throw ParseError("expected number in window", peek().pos);
    return advance().num;
  }

  Formula atom() {
    const std::size_t pos = peek().pos;
    RawAtom lhs = linexpr();
    double flip;
    switch (peek().kind) {
      case Tok::Gt:
      case Tok::Ge: flip = 1.0; break;
      case Tok::Lt:
      case Tok::Le: flip = -1.0; break;
      default: throw ParseError("expected comparison operator", peek().pos);
    }
    advance();
    double rhs_sign = accept(Tok::Minus) ? -1.0 : 1.0;
    if (peek().kind != Tok::Number)
      throw ParseError("expected number on comparison right-hand side", peek().pos);
    const double rhs = rhs_sign * advance().num;

    // Normalize to f(x) > 0: flip=+1 keeps lhs - rhs, flip=-1 gives rhs - lhs.
    Predicate f;
    for (auto& [v, c] : lhs.linear.coeffs) {
      const double k = flip * c;
      if (k != 0.0) f.coeffs[v] = k;
    }
    f.constant = flip * (lhs.linear.constant - rhs);
    const double a = flip * lhs.abs_coeff;
    if (a == 0.0) {
      if (f.coeffs.empty()) throw ParseError("predicate has no variables", pos);
      return make_pred(std::move(f));
    }
    // f + a*|v| > 0 splits on the sign of v: a > 0 gives the disjunction of
    // the two sign cases, a < 0 the conjunction.
    Predicate plus = f;
    plus.coeffs[lhs.abs_var] += a;
    if (plus.coeffs[lhs.abs_var] == 0.0) plus.coeffs.erase(lhs.abs_var);
    Predicate minus = f;
    minus.coeffs[lhs.abs_var] -= a;
    if (minus.coeffs[lhs.abs_var] == 0.0) minus.coeffs.erase(lhs.abs_var);
    if (plus.coeffs.empty() || minus.coeffs.empty())
      throw ParseError("absolute-value term cancels out", pos);
    if (a > 0.0) return make_or(make_pred(std::move(plus)), make_pred(std::move(minus)));
    return make_and(make_pred(std::move(plus)), make_pred(std::move(minus)));
  }

  RawAtom linexpr() {
    RawAtom out;
    double sign = accept(Tok::Minus) ? -1.0 : 1.0;
    term(out, sign);
    for (;;) {
      if (accept(Tok::Plus)) sign = 1.0;
      else if (accept(Tok::Minus)) sign = -1.0;
      else break;
      term(out, sign);
    }
    return out;
  }

  void term(RawAtom& out, double sign) {
    const std::size_t pos = peek().pos;
    double coeff = sign;
    if (peek().kind == Tok::Number) {
      coeff *= advance().num;
      accept(Tok::Star);
      if (peek().kind != Tok::Ident || is_reserved(peek().text))
        throw ParseError("expected variable after coefficient", peek().pos);
      add_linear(out, advance().text, coeff, pos);
      return;
    }
    if (is_keyword(peek(), "abs")) {
      advance();
      expect(Tok::LParen, "expected '(' after abs");
      if (peek().kind != Tok::Ident || is_reserved(peek().text))
        throw ParseError("expected variable inside abs", peek().pos);
      std::string var = advance().text;
      expect(Tok::RParen, "expected ')' after abs variable");
      if (out.abs_coeff != 0.0)
        throw ParseError("at most one abs(...) term per predicate", pos);
      out.abs_var = std::move(var);
      out.abs_coeff = coeff;
      return;
    }
    if (peek().kind == Tok::Ident && !is_reserved(peek().text)) {
      add_linear(out, advance().text, coeff, pos);
      return;
    }
    throw ParseError("expected term", peek().pos);
  }

  void add_linear(RawAtom& out, const std::string& var, double coeff, std::size_t pos) {
    auto& slot = out.linear.coeffs[var];
    slot += coeff;
    if (slot == 0.0) out.linear.coeffs.erase(var);
    (void)pos;
  }

  static bool is_reserved(const std::string& s) {
    static const char* kws[] = {"not", "and", "or", "implies", "G", "alw", "F", "ev", "U", "until", "abs"};
    for (auto* k : kws)
      if (s == k) return true;
    return false;
  }

  Lexer lex_;
  std::size_t idx_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace rosimon
