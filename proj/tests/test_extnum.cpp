// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "counters/extnum.hpp"

namespace counters {
namespace {

const ExtInt kPos = ExtInt::pos_inf();
const ExtInt kNeg = ExtInt::neg_inf();

ExtInt F(std::int64_t v) { return ExtInt::finite(v); }

// Small grid covering both infinities and finite values around zero.
std::vector<ExtInt> grid() {
  std::vector<ExtInt> g{kNeg, kPos};
  for (std::int64_t v = -3; v <= 3; ++v) g.push_back(F(v));
  return g;
}

bool indeterminate_sum(ExtInt a, ExtInt b) {
  return (a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf());
}

TEST_SUITE("extnum") {

TEST_CASE("construction and accessors") {
  CHECK(F(5).is_finite());
  CHECK(F(5).value() == 5);
  CHECK(kPos.is_pos_inf());
  CHECK(kNeg.is_neg_inf());
  CHECK(kPos.is_inf());
  CHECK_FALSE(F(0).is_inf());
  CHECK_THROWS_AS(kPos.value(), std::logic_error);
  CHECK(ExtInt() == F(0));
}

TEST_CASE("standard order") {
  CHECK(kNeg < F(-1000));
  CHECK(F(1000) < kPos);
  CHECK(kNeg < kPos);
  CHECK(F(2) < F(3));
  CHECK_FALSE(kPos < kPos);
  CHECK(F(3) <= F(3));
  CHECK(kPos >= F(7));
  CHECK(min(kPos, F(3)) == F(3));
  CHECK(min(kNeg, F(3)) == kNeg);
  CHECK(max(kNeg, kNeg) == kNeg);
  CHECK(max(F(2), F(5)) == F(5));
}

TEST_CASE("add_conv") {
  CHECK(add_conv(kPos, kNeg, InfConvention::to_pos_inf) == kPos);
  CHECK(add_conv(kNeg, kPos, InfConvention::to_pos_inf) == kPos);
  CHECK(add_conv(kPos, kNeg, InfConvention::to_neg_inf) == kNeg);
  CHECK(add_conv(F(3), F(4), InfConvention::to_pos_inf) == F(7));
  CHECK(add_conv(kNeg, F(5), InfConvention::to_pos_inf) == kNeg);
  CHECK(add_conv(F(5), kPos, InfConvention::to_neg_inf) == kPos);
  CHECK(add_conv(kPos, kPos, InfConvention::to_neg_inf) == kPos);
  CHECK(add_conv(kNeg, kNeg, InfConvention::to_pos_inf) == kNeg);
}

TEST_CASE("sub_conv") {
  CHECK(sub_conv(kPos, kPos, InfConvention::to_neg_inf) == kNeg);
  CHECK(sub_conv(kPos, kPos, InfConvention::to_pos_inf) == kPos);
  CHECK(sub_conv(kNeg, kNeg, InfConvention::to_neg_inf) == kNeg);
  CHECK(sub_conv(kNeg, kNeg, InfConvention::to_pos_inf) == kPos);
  CHECK(sub_conv(F(2), F(5), InfConvention::to_pos_inf) == F(-3));
  // determinate mixed forms keep their value under both conventions
  for (auto conv : {InfConvention::to_pos_inf, InfConvention::to_neg_inf}) {
    CHECK(sub_conv(kPos, kNeg, conv) == kPos);
    CHECK(sub_conv(kNeg, kPos, conv) == kNeg);
    CHECK(sub_conv(F(4), kNeg, conv) == kPos);
    CHECK(sub_conv(F(4), kPos, conv) == kNeg);
    CHECK(sub_conv(kPos, F(4), conv) == kPos);
    CHECK(sub_conv(kNeg, F(4), conv) == kNeg);
  }
}

TEST_CASE("checked overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  const std::int64_t small = std::numeric_limits<std::int64_t>::min();
  CHECK_THROWS_AS(add_conv(F(big), F(1), InfConvention::to_pos_inf), std::overflow_error);
  CHECK_THROWS_AS(sub_conv(F(small), F(1), InfConvention::to_pos_inf), std::overflow_error);
  CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(small, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK(checked_add(big - 1, 1) == big);
  CHECK(checked_mul(1'000'000, 1'000'000) == 1'000'000'000'000);
}

TEST_CASE("negate") {
  CHECK(negate(F(7)) == F(-7));
  CHECK(negate(F(0)) == F(0));
  CHECK(negate(kPos) == kNeg);
  CHECK(negate(kNeg) == kPos);
}

TEST_CASE("lcm") {
  CHECK(lcm(F(3), F(6)) == F(6));
  CHECK(lcm(F(4), F(6)) == F(12));
  CHECK(lcm(F(1), F(1)) == F(1));
  CHECK(lcm(F(5), F(7)) == F(35));
  CHECK_THROWS_AS(lcm(F(0), F(3)), std::domain_error);
  CHECK_THROWS_AS(lcm(F(-2), F(3)), std::domain_error);
  CHECK_THROWS_AS(lcm(kPos, F(3)), std::domain_error);
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(7, 3) == 3);
  CHECK(ceil_div(6, 3) == 2);
  CHECK(ceil_div(1, 3) == 1);
  CHECK(ceil_div(0, 3) == 0);
  CHECK(ceil_div(-1, 3) == 0);
  CHECK(ceil_div(-7, 3) == -2);
}

TEST_CASE("rendering") {
  CHECK(to_string(F(5)) == "5");
  CHECK(to_string(F(-3)) == "-3");
  CHECK(to_string(kPos) == "inf");
  CHECK(to_string(kNeg) == "-inf");
}

TEST_CASE("commutativity over the grid") {
  for (auto conv : {InfConvention::to_pos_inf, InfConvention::to_neg_inf})
    for (ExtInt a : grid())
      for (ExtInt b : grid()) CHECK(add_conv(a, b, conv) == add_conv(b, a, conv));
}

TEST_CASE("associativity without indeterminate forms") {
  for (auto conv : {InfConvention::to_pos_inf, InfConvention::to_neg_inf})
    for (ExtInt a : grid())
      for (ExtInt b : grid())
        for (ExtInt c : grid()) {
          if (indeterminate_sum(a, b) || indeterminate_sum(b, c)) continue;
          ExtInt ab = add_conv(a, b, conv);
          ExtInt bc = add_conv(b, c, conv);
          if (indeterminate_sum(ab, c) || indeterminate_sum(a, bc)) continue;
          CHECK(add_conv(ab, c, conv) == add_conv(a, bc, conv));
        }
}

TEST_CASE("convention only matters for indeterminate forms") {
  for (ExtInt a : grid())
    for (ExtInt b : grid()) {
      if (!indeterminate_sum(a, b))
        CHECK(add_conv(a, b, InfConvention::to_pos_inf) ==
              add_conv(a, b, InfConvention::to_neg_inf));
      bool indeterminate_diff = a.is_inf() && b.is_inf() && a == b;
      if (!indeterminate_diff)
        CHECK(sub_conv(a, b, InfConvention::to_pos_inf) ==
              sub_conv(a, b, InfConvention::to_neg_inf));
    }
}

TEST_CASE("subtraction is addition of the negation") {
  for (auto conv : {InfConvention::to_pos_inf, InfConvention::to_neg_inf})
    for (ExtInt a : grid())
      for (ExtInt b : grid()) CHECK(sub_conv(a, b, conv) == add_conv(a, negate(b), conv));
}

}  // TEST_SUITE

}  // namespace
}  // namespace counters
