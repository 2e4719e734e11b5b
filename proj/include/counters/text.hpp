// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Plain-text grammar for series and operator expressions.
//
//   extint := INT | "inf" | "-inf"
//   mono   := extint "d" extint
//   poly   := mono ("+" mono)*
//   series := "eps" | "top" | poly
//           | (poly "+")? "(" poly ")" "(" mono ")" "*"
//   expr   := series | expr OPKW expr | "(" expr ")"
//   OPKW   := "oplus" | "wedge" | "hadamard" | "hres" | "hdres"
//
// Whitespace between tokens is insignificant. Operators are infix,
// left-associative, and share one precedence level. Series literals are
// normalized and canonicalized while parsing.

#ifndef COUNTERS_TEXT_HPP
#define COUNTERS_TEXT_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "counters/series.hpp"

namespace counters {

// Syntax or literal-validation error with a 1-based column.
class ParseFailure : public std::runtime_error {
 public:
  ParseFailure(const std::string& message, std::size_t column);

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

enum class OpKind { oplus_op, wedge_op, hadamard_op, hres_op, hdres_op };

const char* op_name(OpKind op);  // the grammar keyword

// Binary expression tree; leaves hold parsed series.
class Expr {
 public:
  static Expr literal(Series s);
  static Expr node(OpKind op, Expr lhs, Expr rhs);

  bool is_literal() const { return !lhs_; }
  const Series& series() const;  // literal only
  OpKind op() const;             // node only
  const Expr& lhs() const;
  const Expr& rhs() const;

 private:
  Expr() = default;

  OpKind op_ = OpKind::oplus_op;
  Series series_;
  std::shared_ptr<const Expr> lhs_, rhs_;
};

// Parses the whole string as an expr. Throws ParseFailure.
Expr parse(const std::string& text);

// Parses the whole string as a single series literal. Throws ParseFailure.
Series parse_series(const std::string& text);

// Evaluates the tree bottom-up. An undefined dual residual short-circuits.
// A common -inf head in hres propagates as CommonInfinityError.
OpOutcome evaluate(const Expr& e);

// Canonical text per the series production, e.g. "5d2", "eps",
// "-1d0 + (5d2)(2d1)*". Expects a canonical series.
std::string format_text(const Series& s);

// { "transient": [[n,t],...], "pattern": [[N,T],...], "period": [nu,tau] }
// with infinities as "inf"/"-inf" strings; pattern and period are omitted
// for polynomials.
nlohmann::ordered_json format_json(const Series& s);

}  // namespace counters

#endif  // COUNTERS_TEXT_HPP
