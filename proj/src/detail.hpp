// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Internal helpers shared by the series and hadamard translation units.

#ifndef COUNTERS_SRC_DETAIL_HPP
#define COUNTERS_SRC_DETAIL_HPP

#include <cstdint>
#include <vector>

#include "counters/series.hpp"

namespace counters::detail {

// Collects monomials pushed in ascending exponent order and keeps the
// minimal staircase: terms whose coefficient does not strictly increase are
// merged away, and empty contributions (nu = +inf, tau = -inf) are dropped.
class StairBuilder {
 public:
  void push(Monomial m);
  Polynomial take();

 private:
  std::vector<Monomial> terms_;
};

// Pointwise min (use_min) or max of two polynomials viewed as maps.
Polynomial poly_combine(const Polynomial& a, const Polynomial& b, bool use_min);

// expand() applied to a bare polynomial.
Polynomial clip(const Polynomial& p, std::int64_t up_to);

// Splits P (supported at or before tp + tau - 1) at tp, attaches the period
// (nu, tau) to the window [tp, tp + tau - 1], and canonicalizes. A gain of 0
// yields the eventually constant polynomial instead. The window must be
// nonempty for nu > 0.
Series split_and_attach(const Polynomial& P, std::int64_t tp, std::int64_t tau,
                        std::int64_t nu);

// First stored exponent / coefficient of the map (transient first, then
// pattern). For eps both are +inf.
ExtInt first_exponent(const Series& s);
ExtInt first_coefficient(const Series& s);

// Pattern onset of a periodic series (first pattern exponent).
std::int64_t pattern_start(const Series& s);

// All finite stored exponents, transient and pattern alike.
std::vector<std::int64_t> stored_exponents(const Series& s);

// True change points c of s with lo <= c <= hi, as monomials (value, c).
std::vector<Monomial> change_points_in(const Series& s, std::int64_t lo, std::int64_t hi);

// Growth per time step as an exact rational, or infinite for maps that
// reach +inf (finite-support polynomials, including eps).
struct Rate {
  bool infinite = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Rate rate_of(const Series& s);  // requires canonical input
int compare(Rate a, Rate b);    // -1, 0, 1

// Time past which a canonical series is governed by its tail shape (pattern
// onset, or last finite exponent for polynomials; 0 when there is none).
std::int64_t shape_horizon(const Series& s);

// Period length of the tail (1 for polynomials).
std::int64_t tail_period(const Series& s);

}  // namespace counters::detail

#endif  // COUNTERS_SRC_DETAIL_HPP
