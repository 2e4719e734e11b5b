// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Hadamard product of counters (pointwise min-plus product, i.e. pointwise
// sum of values) together with its residual and dual residual:
//
//   odot(a, b)   pointwise  a(t) + b(t)        (indeterminate forms -> +inf)
//   sharp(y, a)  greatest x with odot(a, x) preceding y
//   flat(y, a)   least x with y preceding odot(a, x); partial: defined only
//                when y is +inf wherever a is infinite
//
// Monomial and polynomial kernels are exposed for direct use and testing;
// the series-level entry points dispatch on operand shape.

#ifndef COUNTERS_HADAMARD_HPP
#define COUNTERS_HADAMARD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "counters/series.hpp"

namespace counters {

// Thrown when both residual operands are -inf over an initial segment; the
// difference of such coefficients has no consistent resolution.
class CommonInfinityError : public std::domain_error {
 public:
  explicit CommonInfinityError(ExtInt witness_time);
  ExtInt witness_time() const { return witness_time_; }

 private:
  ExtInt witness_time_;
};

// Counts elementary monomial combinations performed by the polynomial
// kernels, for complexity assertions in tests.
struct KernelStats {
  std::size_t mono_ops = 0;
};

// Parameters shared by the periodic-operand procedures: tau_bar is the
// common period length, nu_bar the per-tau_bar gain difference (first
// operand minus second), tp_bar the later pattern onset, t1_bar the earlier
// first exponent.
struct DiffParams {
  std::int64_t tau_bar;
  std::int64_t nu_bar;
  std::int64_t tp_bar;
  std::int64_t t1_bar;
};

// --- monomial kernels (raw formulas, degenerate inputs included) ---

// (nu + nu')d^min(tau, tau'); the sum resolves indeterminates to +inf.
Monomial odot_mono(Monomial a, Monomial b);

// (nu - nu')d^tau when tau < tau', else (nu - nu')d^inf; the difference
// resolves indeterminates to -inf.
Monomial sharp_mono(Monomial y, Monomial a);

// (nu - nu')d^tau, defined only when tau <= tau'; the difference resolves
// indeterminates to +inf.
std::optional<Monomial> flat_mono(Monomial y, Monomial a);

// --- polynomial kernels (operands canonical) ---

// Merge walk over both term lists; skips dominated products and stops at
// the shared support end. O(size(a) + size(b)) monomial combinations.
Polynomial odot_poly(const Polynomial& a, const Polynomial& b, KernelStats* stats = nullptr);

// Min-fold of sharp_mono(term, a) over the terms of y: one term per
// exponent strictly below a.tau, then a single d^inf term for the rest.
Polynomial sharp_poly_mono(const Polynomial& y, Monomial a, KernelStats* stats = nullptr);

// Pointwise max of sharp_poly_mono(y, term) over the terms of a.
Polynomial sharp_poly(const Polynomial& y, const Polynomial& a, KernelStats* stats = nullptr);

// (nu - nu_j)d^tau with j the first term of a whose exponent covers tau;
// empty when no term does.
std::optional<Monomial> flat_mono_poly(Monomial y, const Polynomial& a);

// Two-pointer walk; defined iff the support of y ends no later than the
// support of a (witness: the first time a vanishes under y).
OpOutcome flat_poly(const Polynomial& y, const Polynomial& a, KernelStats* stats = nullptr);

// --- periodic-operand parameters ---

// Requires both operands canonical periodic. Throws CommonInfinityError when
// both start with a -inf coefficient.
DiffParams diff_params(const Series& s, const Series& s2);

// Number of periods after tp_bar before the residual's running maximum is
// governed by the periodic window alone. Requires d.nu_bar > 0.
std::int64_t kappa(const Series& y, const Series& a, const DiffParams& d);

// --- series-level operations (results canonical) ---

Series odot(const Series& a, const Series& b);

// Throws CommonInfinityError when y and a are both -inf over an initial
// segment and neither degenerate rule applies.
Series sharp(const Series& y, const Series& a);

OpOutcome flat(const Series& y, const Series& a);

}  // namespace counters

#endif  // COUNTERS_HADAMARD_HPP
