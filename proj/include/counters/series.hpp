// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Counters: non-decreasing maps from time (integers plus both infinities) to
// counts, stored as compact delta-domain representations. The stored shapes:
//
//   monomial     nu*d^tau      value nu at every time <= tau, +inf afterwards
//   polynomial   finite min of monomials (strictly increasing in both fields)
//   periodic     transient + pattern repeated every `tau` with gain `nu`
//
// The empty polynomial is eps (the all-+inf map except at time -inf); the
// single monomial -inf*d^inf is top (the all--inf map).

#ifndef COUNTERS_SERIES_HPP
#define COUNTERS_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "counters/extnum.hpp"

namespace counters {

// Thrown when a representation violates the structural rules.
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One term nu*d^tau. The degenerate cases nu = +inf and tau = -inf both
// denote the empty contribution; they may appear as raw kernel results but
// are never stored inside a Polynomial.
struct Monomial {
  ExtInt nu;
  ExtInt tau;
};

constexpr bool operator==(const Monomial& a, const Monomial& b) {
  return a.nu == b.nu && a.tau == b.tau;
}
constexpr bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

// A finite min-combination of monomials. Stored terms are strictly
// increasing in both coefficient and exponent, which also enforces that only
// the first coefficient may be -inf and only the last exponent may be +inf.
// No stored coefficient is +inf and no stored exponent is -inf.
class Polynomial {
 public:
  Polynomial() = default;  // eps

  static Polynomial eps() { return Polynomial(); }

  // Validates the structural rules and throws SeriesError on violation.
  static Polynomial from_terms(std::vector<Monomial> terms);

  // Normalizes an arbitrary bag of monomials: drops empty contributions
  // (nu = +inf or tau = -inf), sorts, and keeps the minimal staircase.
  static Polynomial from_unsorted_terms(std::vector<Monomial> terms);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& term(std::size_t i) const { return terms_[i]; }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Monomial& front() const { return terms_.front(); }
  const Monomial& back() const { return terms_.back(); }

  // Step lookup at a finite time t: the coefficient of the first term whose
  // exponent is >= t, or +inf past the support.
  ExtInt value_at(ExtInt t) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  explicit Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

  std::vector<Monomial> terms_;
};

// Why a partial operation produced no result, with a time at which the
// obstruction is visible.
struct Undefined {
  std::string reason;
  ExtInt witness_time;
};

// A counter in one of the two stored shapes. Polynomial values (including
// eps and top) have an empty pattern. Periodic values repeat `pattern`
// shifted by k*period.tau with coefficient gain k*period.nu for all k >= 0,
// combined by min with the transient.
//
// periodic() accepts any structurally sound form; canonicalize() maps it to
// the unique normal form (earliest onset, true change points, gain 0
// rewritten as an eventually constant polynomial).
class Series {
 public:
  Series() = default;  // eps

  static Series eps();
  static Series top();
  static Series e();  // 0*d^0
  static Series monomial(Monomial m);
  static Series polynomial(Polynomial p);

  // Requires: pattern nonempty with every entry finite, period.nu finite
  // >= 0, period.tau finite >= 1. Throws SeriesError otherwise.
  static Series periodic(Polynomial transient, Polynomial pattern, Monomial period);

  bool is_periodic() const { return periodic_; }
  bool is_polynomial() const { return !periodic_; }
  bool is_eps() const { return !periodic_ && transient_.empty(); }
  bool is_top() const;

  const Polynomial& transient() const { return transient_; }
  const Polynomial& pattern() const { return pattern_; }  // empty unless periodic

  // Requires is_periodic().
  const Monomial& period() const;

  // Requires is_polynomial().
  const Polynomial& as_polynomial() const;

  friend bool operator==(const Series& a, const Series& b);  // structural
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  Polynomial transient_;
  Polynomial pattern_;
  Monomial period_{ExtInt::finite(0), ExtInt::finite(1)};
  bool periodic_ = false;
};

// Result of a partial operation: a Series, or a structured explanation of
// why no result exists.
class OpOutcome {
 public:
  static OpOutcome ok(Series s);
  static OpOutcome undefined(std::string reason, ExtInt witness_time);

  bool is_ok() const { return ok_; }
  const Series& value() const;    // requires is_ok()
  const Undefined& why() const;   // requires !is_ok()

 private:
  OpOutcome() = default;

  bool ok_ = false;
  Series value_;
  Undefined why_;
};

// Value of s at time t. End points: every counter is -inf at t = -inf; at
// t = +inf the value is +inf, except top which stays -inf.
ExtInt eval(const Series& s, ExtInt t);

// The change points of s at times <= up_to, with the value run that crosses
// up_to clipped to exponent up_to. A polynomial supported at or before up_to
// is returned unchanged; an up_to below every change point yields the single
// clamped monomial. expand(eps, T) is eps.
Polynomial expand(const Series& s, std::int64_t up_to);

// Unique normal form. Idempotent and value-preserving. Polynomials are
// already normal; periodic forms are rewritten with the earliest onset and
// true change points, and a gain of 0 becomes an eventually constant
// polynomial. The stored period (nu, tau) is kept as given (no ratio
// reduction).
Series canonicalize(const Series& s);

// Pointwise min (oplus) and pointwise max (wedge) of the maps. Results are
// canonical.
Series oplus(const Series& a, const Series& b);
Series wedge(const Series& a, const Series& b);

// Order test: a precedes b in the min-plus sense, i.e. eval(a, t) >=
// eval(b, t) at every time (the algebraic order is opposite to the numeric
// order on values).
bool leq(const Series& a, const Series& b);

// Semantic equality: canonical forms compared structurally, with periodic
// representations whose periods differ by an unreduced multiple compared by
// value over a covering window.
bool equals(const Series& a, const Series& b);

}  // namespace counters

#endif  // COUNTERS_SERIES_HPP
