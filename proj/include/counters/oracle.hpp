// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Brute-force pointwise reference for the Hadamard operations. Everything
// here works directly on evaluated coefficients, never on the stored shape,
// so results can be checked against the structural algorithms.

#ifndef COUNTERS_ORACLE_HPP
#define COUNTERS_ORACLE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "counters/extnum.hpp"
#include "counters/series.hpp"

namespace counters {

// Coefficients of a map on the inclusive time window [lo, hi].
struct CoeffWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<ExtInt> values;

  ExtInt at(std::int64_t t) const;  // requires lo <= t <= hi
};

// Coefficients of s on [lo, hi] by direct evaluation.
CoeffWindow window_of(const Series& s, std::int64_t lo, std::int64_t hi);

// Pointwise sum a(t) + b(t), +inf absorbing.
CoeffWindow oracle_odot(const Series& a, const Series& b, std::int64_t lo, std::int64_t hi);

// Least coefficients x with a(t) + x(t) >= y(t) everywhere and x
// nondecreasing: the running maximum of y(t) - a(t), scanned from before
// every stored exponent so earlier history is accounted for.
CoeffWindow oracle_sharp(const Series& y, const Series& a, std::int64_t lo, std::int64_t hi);

// Greatest coefficients x with a(t) + x(t) <= y(t) everywhere and x
// nondecreasing: the suffix minimum of y(t) - a(t). Undefined (with the
// earliest witness time) when a is infinite somewhere y is not +inf; the
// suffix extends far enough past both tails to cover every later minimum.
std::variant<CoeffWindow, Undefined> oracle_flat(const Series& y, const Series& a,
                                                 std::int64_t lo, std::int64_t hi);

}  // namespace counters

#endif  // COUNTERS_ORACLE_HPP
