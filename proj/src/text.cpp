// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "counters/hadamard.hpp"

namespace counters {

ParseFailure::ParseFailure(const std::string& message, std::size_t column)
    : std::runtime_error(message + " at column " + std::to_string(column)),
      column_(column) {}

const char* op_name(OpKind op) {
  switch (op) {
    case OpKind::oplus_op: return "oplus";
    case OpKind::wedge_op: return "wedge";
    case OpKind::hadamard_op: return "hadamard";
    case OpKind::hres_op: return "hres";
    case OpKind::hdres_op: return "hdres";
  }
  return "?";
}

Expr Expr::literal(Series s) {
  Expr e;
  e.series_ = std::move(s);
  return e;
}

Expr Expr::node(OpKind op, Expr lhs, Expr rhs) {
  Expr e;
  e.op_ = op;
  e.lhs_ = std::make_shared<const Expr>(std::move(lhs));
  e.rhs_ = std::make_shared<const Expr>(std::move(rhs));
  return e;
}

const Series& Expr::series() const {
  if (!is_literal()) throw std::logic_error("Expr::series on an operator node");
  return series_;
}

OpKind Expr::op() const {
  if (is_literal()) throw std::logic_error("Expr::op on a literal");
  return op_;
}

const Expr& Expr::lhs() const {
  if (is_literal()) throw std::logic_error("Expr::lhs on a literal");
  return *lhs_;
}

const Expr& Expr::rhs() const {
  if (is_literal()) throw std::logic_error("Expr::rhs on a literal");
  return *rhs_;
}

// --- lexer ---

namespace {

enum class Tok {
  integer,
  inf,
  neg_inf,
  marker_d,
  plus,
  lparen,
  rparen,
  star,
  kw_oplus,
  kw_wedge,
  kw_hadamard,
  kw_hres,
  kw_hdres,
  kw_eps,
  kw_top,
  end,
};

struct Token {
  Tok kind;
  std::int64_t value = 0;  // integer only
  std::size_t column = 0;  // 1-based
};

struct Keyword {
  const char* word;
  Tok kind;
};

// Ordered longest first so prefixes ("d", "inf") never shadow keywords.
constexpr Keyword kKeywords[] = {
    {"hadamard", Tok::kw_hadamard}, {"hdres", Tok::kw_hdres}, {"oplus", Tok::kw_oplus},
    {"wedge", Tok::kw_wedge},       {"hres", Tok::kw_hres},   {"eps", Tok::kw_eps},
    {"top", Tok::kw_top},           {"inf", Tok::inf},        {"d", Tok::marker_d},
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+') {
      out.push_back({Tok::plus, 0, col});
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::lparen, 0, col});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::rparen, 0, col});
      ++i;
      continue;
    }
    if (c == '*') {
      out.push_back({Tok::star, 0, col});
      ++i;
      continue;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '-' && text.compare(i + 1, 3, "inf") == 0) {
        out.push_back({Tok::neg_inf, 0, col});
        i += 4;
        continue;
      }
      std::size_t j = i + (c == '-' ? 1 : 0);
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + (c == '-' ? 1 : 0)) throw ParseFailure("expected digits after '-'", col + 1);
      std::int64_t v = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, v);
      if (res.ec != std::errc() || res.ptr != text.data() + j)
        throw ParseFailure("integer out of range", col);
      out.push_back({Tok::integer, v, col});
      i = j;
      continue;
    }
    bool matched = false;
    for (const Keyword& kw : kKeywords) {
      if (text.compare(i, std::char_traits<char>::length(kw.word), kw.word) == 0) {
        out.push_back({kw.kind, 0, col});
        i += std::char_traits<char>::length(kw.word);
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseFailure(std::string("unexpected character '") + c + "'", col);
  }
  out.push_back({Tok::end, 0, text.size() + 1});
  return out;
}

// --- parser ---

bool starts_extint(Tok t) {
  return t == Tok::integer || t == Tok::inf || t == Tok::neg_inf;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Expr parse_expr_all() {
    Expr e = parse_expr();
    expect_end();
    return e;
  }

  Series parse_series_all() {
    Series s = parse_series_literal();
    expect_end();
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return toks_[std::min(i, toks_.size() - 1)];
  }

  // Remembers the furthest failure so the most specific error survives
  // backtracking over the '(' ambiguity.
  [[noreturn]] void fail(std::size_t column, const std::string& message) {
    if (column >= best_column_) {
      best_column_ = column;
      best_message_ = message;
    }
    throw ParseFailure(best_message_, best_column_);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek().column, std::string("expected ") + what);
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail(peek().column, "unexpected trailing input");
  }

  static std::optional<OpKind> as_op(Tok t) {
    switch (t) {
      case Tok::kw_oplus: return OpKind::oplus_op;
      case Tok::kw_wedge: return OpKind::wedge_op;
      case Tok::kw_hadamard: return OpKind::hadamard_op;
      case Tok::kw_hres: return OpKind::hres_op;
      case Tok::kw_hdres: return OpKind::hdres_op;
      default: return std::nullopt;
    }
  }

  Expr parse_expr() {
    Expr e = parse_operand();
    while (auto op = as_op(peek().kind)) {
      ++pos_;
      Expr rhs = parse_operand();
      e = Expr::node(*op, std::move(e), std::move(rhs));
    }
    return e;
  }

  Expr parse_operand() {
    if (peek().kind != Tok::lparen) return Expr::literal(parse_series_literal());
    std::size_t saved = pos_;
    try {
      return Expr::literal(parse_series_literal());
    } catch (const ParseFailure&) {
      pos_ = saved;
    }
    expect(Tok::lparen, "'('");
    Expr e = parse_expr();
    expect(Tok::rparen, "')'");
    return e;
  }

  ExtInt parse_extint() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      ++pos_;
      return ExtInt::finite(t.value);
    }
    if (t.kind == Tok::inf) {
      ++pos_;
      return ExtInt::pos_inf();
    }
    if (t.kind == Tok::neg_inf) {
      ++pos_;
      return ExtInt::neg_inf();
    }
    fail(t.column, "expected integer or 'inf'");
  }

  Monomial parse_mono() {
    ExtInt nu = parse_extint();
    expect(Tok::marker_d, "'d'");
    ExtInt tau = parse_extint();
    return {nu, tau};
  }

  // poly := mono ("+" mono)*, but a "+" directly followed by "(" belongs to
  // the enclosing series production and is left unconsumed.
  std::vector<Monomial> parse_poly_terms() {
    std::vector<Monomial> terms{parse_mono()};
    while (peek().kind == Tok::plus && starts_extint(peek(1).kind)) {
      ++pos_;
      terms.push_back(parse_mono());
    }
    return terms;
  }

  Series parse_series_literal() {
    std::size_t start_col = peek().column;
    if (peek().kind == Tok::kw_eps) {
      ++pos_;
      return Series::eps();
    }
    if (peek().kind == Tok::kw_top) {
      ++pos_;
      return Series::top();
    }

    std::vector<Monomial> transient;
    bool periodic = false;
    if (starts_extint(peek().kind)) {
      transient = parse_poly_terms();
      if (peek().kind == Tok::plus && peek(1).kind == Tok::lparen) {
        ++pos_;
        periodic = true;
      }
    } else if (peek().kind == Tok::lparen) {
      periodic = true;
    } else {
      fail(peek().column, "expected series");
    }

    try {
      if (!periodic)
        return canonicalize(
            Series::polynomial(Polynomial::from_unsorted_terms(std::move(transient))));

      expect(Tok::lparen, "'('");
      std::vector<Monomial> pattern = parse_poly_terms();
      expect(Tok::rparen, "')'");
      expect(Tok::lparen, "'('");
      Monomial period = parse_mono();
      expect(Tok::rparen, "')'");
      expect(Tok::star, "'*'");
      return canonicalize(Series::periodic(Polynomial::from_unsorted_terms(std::move(transient)),
                                           Polynomial::from_unsorted_terms(std::move(pattern)),
                                           period));
    } catch (const SeriesError& e) {
      fail(start_col, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t best_column_ = 0;
  std::string best_message_;
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).parse_expr_all(); }

Series parse_series(const std::string& text) { return Parser(text).parse_series_all(); }

OpOutcome evaluate(const Expr& e) {
  if (e.is_literal()) return OpOutcome::ok(e.series());
  OpOutcome l = evaluate(e.lhs());
  if (!l.is_ok()) return l;
  OpOutcome r = evaluate(e.rhs());
  if (!r.is_ok()) return r;
  switch (e.op()) {
    case OpKind::oplus_op: return OpOutcome::ok(oplus(l.value(), r.value()));
    case OpKind::wedge_op: return OpOutcome::ok(wedge(l.value(), r.value()));
    case OpKind::hadamard_op: return OpOutcome::ok(odot(l.value(), r.value()));
    case OpKind::hres_op: return OpOutcome::ok(sharp(l.value(), r.value()));
    case OpKind::hdres_op: return flat(l.value(), r.value());
  }
  throw std::logic_error("evaluate: unknown operator");
}

// --- formatting ---

namespace {

std::string mono_text(const Monomial& m) {
  return to_string(m.nu) + "d" + to_string(m.tau);
}

std::string terms_text(const Polynomial& p) {
  std::string out;
  for (const Monomial& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += mono_text(m);
  }
  return out;
}

nlohmann::ordered_json ext_json(ExtInt v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

nlohmann::ordered_json terms_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const Monomial& m : p.terms())
    arr.push_back(nlohmann::ordered_json::array({ext_json(m.nu), ext_json(m.tau)}));
  return arr;
}

}  // namespace

std::string format_text(const Series& s) {
  if (s.is_top()) return "top";
  if (s.is_eps()) return "eps";
  std::string out = terms_text(s.transient());
  if (s.is_periodic()) {
    std::string tail = "(" + terms_text(s.pattern()) + ")(" +
                       mono_text({s.period().nu, s.period().tau}) + ")*";
    return out.empty() ? tail : out + " + " + tail;
  }
  return out;
}

nlohmann::ordered_json format_json(const Series& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["transient"] = terms_json(s.transient());
  if (s.is_periodic()) {
    j["pattern"] = terms_json(s.pattern());
    j["period"] = nlohmann::ordered_json::array(
        {ext_json(s.period().nu), ext_json(s.period().tau)});
  }
  return j;
}

}  // namespace counters
