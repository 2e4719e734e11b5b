// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#ifndef COUNTERS_EXTNUM_HPP
#define COUNTERS_EXTNUM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace counters {

// Rule for resolving the indeterminate sum (+inf) + (-inf) and the
// indeterminate differences (+inf) - (+inf) and (-inf) - (-inf). Every
// operation in the library fixes one convention and applies it to all
// coefficients it combines.
enum class InfConvention {
  to_pos_inf,
  to_neg_inf,
};

// std::int64_t extended with both infinities. Finite arithmetic is checked:
// overflow throws std::overflow_error instead of wrapping.
class ExtInt {
 public:
  constexpr ExtInt() = default;

  static constexpr ExtInt finite(std::int64_t v) { return ExtInt(Kind::finite, v); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::pos_inf, 0); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::neg_inf, 0); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  constexpr bool is_inf() const { return kind_ != Kind::finite; }

  // Finite payload; throws std::logic_error on an infinity.
  std::int64_t value() const;

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }

  // Standard numeric order: -inf < every finite value < +inf.
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::finite && a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

 private:
  // Enumerator order gives the numeric order of the three kinds.
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  constexpr ExtInt(Kind k, std::int64_t v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::finite;
  std::int64_t value_ = 0;
};

// a + b with the indeterminate form (+inf) + (-inf) resolved per `conv`.
ExtInt add_conv(ExtInt a, ExtInt b, InfConvention conv);

// a - b with the indeterminate forms (+inf) - (+inf) and (-inf) - (-inf)
// resolved per `conv`. The determinate mixed forms keep their value:
// (+inf) - (-inf) = +inf and (-inf) - (+inf) = -inf, a finite value minus
// -inf is +inf, and a finite value minus +inf is -inf.
ExtInt sub_conv(ExtInt a, ExtInt b, InfConvention conv);

ExtInt negate(ExtInt a);
ExtInt min(ExtInt a, ExtInt b);
ExtInt max(ExtInt a, ExtInt b);

// Least common multiple; both arguments must be finite and >= 1, anything
// else throws std::domain_error.
ExtInt lcm(ExtInt a, ExtInt b);

// Ceiling division for finite operands, den > 0.
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

// Checked finite arithmetic; throws std::overflow_error on wrap.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// "inf", "-inf", or the decimal rendering of the finite value.
std::string to_string(ExtInt a);
std::ostream& operator<<(std::ostream& os, ExtInt a);

}  // namespace counters

#endif  // COUNTERS_EXTNUM_HPP
