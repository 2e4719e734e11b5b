// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/extnum.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace counters {

namespace {

ExtInt resolved(InfConvention conv) {
  return conv == InfConvention::to_pos_inf ? ExtInt::pos_inf() : ExtInt::neg_inf();
}

}  // namespace

std::int64_t ExtInt::value() const {
  if (!is_finite()) throw std::logic_error("ExtInt::value called on an infinity");
  return value_;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
  return r;
}

ExtInt add_conv(ExtInt a, ExtInt b, InfConvention conv) {
  if (a.is_finite() && b.is_finite()) return ExtInt::finite(checked_add(a.value(), b.value()));
  if (a.is_pos_inf() && b.is_neg_inf()) return resolved(conv);
  if (a.is_neg_inf() && b.is_pos_inf()) return resolved(conv);
  return a.is_inf() ? a : b;
}

ExtInt sub_conv(ExtInt a, ExtInt b, InfConvention conv) {
  if (a.is_finite() && b.is_finite()) return ExtInt::finite(checked_sub(a.value(), b.value()));
  if (a.is_inf() && b == a) return resolved(conv);
  if (a.is_inf()) return a;
  return b.is_pos_inf() ? ExtInt::neg_inf() : ExtInt::pos_inf();
}

ExtInt negate(ExtInt a) {
  if (a.is_pos_inf()) return ExtInt::neg_inf();
  if (a.is_neg_inf()) return ExtInt::pos_inf();
  if (a.value() == INT64_MIN) throw std::overflow_error("integer negation overflow");
  return ExtInt::finite(-a.value());
}

ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }
ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

ExtInt lcm(ExtInt a, ExtInt b) {
  if (!a.is_finite() || !b.is_finite() || a.value() < 1 || b.value() < 1)
    throw std::domain_error("lcm requires finite arguments >= 1");
  std::int64_t g = std::gcd(a.value(), b.value());
  return ExtInt::finite(checked_mul(a.value() / g, b.value()));
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::domain_error("ceil_div requires a positive divisor");
  std::int64_t q = num / den;
  if (num % den > 0) ++q;
  return q;
}

std::string to_string(ExtInt a) {
  if (a.is_pos_inf()) return "inf";
  if (a.is_neg_inf()) return "-inf";
  return std::to_string(a.value());
}

std::ostream& operator<<(std::ostream& os, ExtInt a) { return os << to_string(a); }

}  // namespace counters
