// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include <cstdint>
#include <stdexcept>
#include <variant>

#include "doctest.h"

#include "counters/hadamard.hpp"
#include "counters/oracle.hpp"
#include "counters/series.hpp"
#include "counters/text.hpp"
#include "generators.hpp"

namespace counters {
namespace {

using testgen::S;

const ExtInt kPos = ExtInt::pos_inf();
const ExtInt kNeg = ExtInt::neg_inf();

ExtInt F(std::int64_t v) { return ExtInt::finite(v); }
Monomial M(std::int64_t nu, std::int64_t tau) { return {F(nu), F(tau)}; }

Polynomial P(const char* text) { return S(text).as_polynomial(); }

// Checks an operation result against both the expected literal and the
// pointwise oracle window.
void check_series(const Series& got, const char* expect) {
  CAPTURE(expect);
  CAPTURE(format_text(got));
  CHECK(equals(got, S(expect)));
  CHECK(format_text(got) == expect);
}

TEST_SUITE("hadamard") {

TEST_CASE("odot_mono") {
  CHECK(odot_mono(M(5, 2), M(3, 2)) == M(8, 2));
  CHECK(odot_mono(M(2, 2), M(4, 3)) == M(6, 2));
  // the raw kernel keeps the empty contribution explicit
  CHECK(odot_mono({kPos, F(5)}, {kNeg, F(7)}) == Monomial{kPos, F(5)});
}

TEST_CASE("sharp_mono") {
  CHECK(sharp_mono(M(5, 2), M(3, 2)) == Monomial{F(2), kPos});
  CHECK(sharp_mono(M(3, 1), M(1, 4)) == M(2, 1));
  CHECK(sharp_mono({kPos, F(3)}, {kPos, F(5)}) == Monomial{kNeg, F(3)});
}

TEST_CASE("sharp_mono agrees with the running-maximum oracle") {
  Series y = Series::monomial(M(3, 1));
  Series a = Series::monomial(M(1, 4));
  Series x = sharp(y, a);
  check_series(x, "2d1");
  CHECK_FALSE(testgen::first_disagreement(x, oracle_sharp(y, a, -2, 8)).has_value());
}

TEST_CASE("flat_mono") {
  CHECK(flat_mono(M(5, 2), M(3, 2)) == Monomial{F(2), F(2)});
  CHECK(flat_mono(M(0, 1), M(0, 1)) == Monomial{F(0), F(1)});
  CHECK_FALSE(flat_mono(M(4, 5), M(1, 3)).has_value());
}

TEST_CASE("odot_poly") {
  KernelStats stats;
  Polynomial r = odot_poly(P("2d2 + 3d5 + 7d8"), P("4d3 + 6d4"), &stats);
  CHECK(Series::polynomial(r) == S("6d2 + 7d3 + 9d4"));
  // the merge walk skips dominated pairs and stops at the shared support
  // end: three monomial products for this pair, not 3 x 2
  CHECK(stats.mono_ops == 3);

  CHECK(Series::polynomial(odot_poly(P("-3d-1 + -1d2 + 3d4"), P("-1d1 + 0d3 + 2d4"))) ==
        S("-4d-1 + -2d1 + -1d2 + 3d3 + 5d4"));
  CHECK(odot_poly(P("2d2 + 3d5"), Polynomial::eps()).empty());
  CHECK(odot_poly(Polynomial::eps(), Polynomial::eps()).empty());
}

TEST_CASE("sharp_poly_mono") {
  CHECK(Series::polynomial(sharp_poly_mono(P("2d1 + 3d5 + 5d7"), M(0, 2))) ==
        S("2d1 + 3dinf"));
  CHECK(Series::polynomial(sharp_poly_mono(P("2d1 + 3d5 + 5d7"), {F(4), kPos})) ==
        S("-2d1 + -1d5 + 1d7"));
  CHECK(sharp_poly_mono(Polynomial::eps(), M(1, 3)).empty());
}

TEST_CASE("sharp_poly") {
  CHECK(Series::polynomial(sharp_poly(P("2d1 + 3d5 + 5d7"), P("0d2 + 2d5 + 4dinf"))) ==
        S("2d1 + 3d7"));
  CHECK(Series::polynomial(sharp_poly(P("-3d-1 + -1d2 + 3d4"), P("-1d1 + 0d3 + 2d4"))) ==
        S("-2d-1 + 0d2 + 3dinf"));
}

TEST_CASE("sharp_poly of a single monomial matches the row kernel") {
  testgen::Rng rng(201);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = testgen::random_poly(rng);
    Monomial m{F(testgen::pick(rng, -20, 20)), F(testgen::pick(rng, -20, 20))};
    CAPTURE(i);
    CHECK(sharp_poly(p, Polynomial::from_terms({m})) == sharp_poly_mono(p, m));
  }
}

TEST_CASE("flat_mono_poly") {
  CHECK(flat_mono_poly(M(-3, -1), P("-1d1 + 0d3 + 2d4")) == Monomial{F(-2), F(-1)});
  CHECK(flat_mono_poly(M(3, 4), P("-1d1 + 0d3 + 2d4")) == Monomial{F(1), F(4)});
  CHECK_FALSE(flat_mono_poly(M(3, 5), P("-1d1 + 0d3 + 2d4")).has_value());
  CHECK_FALSE(flat_mono_poly(M(3, 5), Polynomial::eps()).has_value());
}

TEST_CASE("flat_poly") {
  OpOutcome r = flat_poly(P("-3d-1 + -1d2 + 3d4"), P("-1d1 + 0d3 + 2d4"));
  REQUIRE(r.is_ok());
  CHECK(r.value() == S("-2d-1 + -1d2 + 1d4"));

  OpOutcome bad = flat_poly(P("1d5"), P("0d3"));
  REQUIRE_FALSE(bad.is_ok());
  CHECK(bad.why().reason == "exponent 5 exceeds 3");
  CHECK(bad.why().witness_time == F(4));

  CHECK(flat_poly(Polynomial::eps(), P("0d3")).is_ok());
  CHECK(flat_poly(Polynomial::eps(), P("0d3")).value().is_eps());
}

TEST_CASE("diff_params") {
  DiffParams d = diff_params(S("-1d0 + (5d2)(2d1)*"), S("-1d-5 + (3d0)(1d2)*"));
  CHECK(d.tau_bar == 2);
  CHECK(d.nu_bar == 3);
  CHECK(d.tp_bar == 2);
  CHECK(d.t1_bar == -5);

  DiffParams z = diff_params(S("2d2 + (6d3)(6d8)*"), S("1d1 + (5d4)(3d4)*"));
  CHECK(z.tau_bar == 8);
  CHECK(z.nu_bar == 0);
  CHECK(z.tp_bar == 4);

  Series same = S("(0d0)(1d1)*");
  CHECK(diff_params(same, same).nu_bar == 0);

  CHECK_THROWS_AS(diff_params(S("3d4"), same), std::logic_error);
}

TEST_CASE("kappa") {
  Series s1 = S("-1d0 + (5d2)(2d1)*");
  Series s2 = S("-1d-5 + (3d0)(1d2)*");
  CHECK(kappa(s1, s2, diff_params(s1, s2)) == 1);

  // transient window empty: later onset equals earlier first exponent
  Series y0 = S("(0d0)(1d1)*");
  Series a0 = S("(0d0)(1d2)*");
  DiffParams d0 = diff_params(y0, a0);
  CHECK(d0.t1_bar == d0.tp_bar);
  CHECK(kappa(y0, a0, d0) == 1);
}

TEST_CASE("kappa grows with a transient spike") {
  // Before its pattern starts, the right operand sits at 0 while the left
  // is already at 1, so the early difference peaks at 1. Once the 11-jump
  // lands, the difference drops to -10 and climbs by 4 per 5 slots; closing
  // the gap of 8 takes two extra periods on top of the guaranteed one.
  Series y = S("(1d1)(1d1)*");
  Series a = S("0d0 + (11d1)(1d5)*");
  DiffParams d = diff_params(y, a);
  CHECK(d.tau_bar == 5);
  CHECK(d.nu_bar == 4);
  CHECK(d.tp_bar == 1);
  CHECK(d.t1_bar == 0);
  CHECK(kappa(y, a, d) == 3);

  Series x = sharp(y, a);
  REQUIRE(x.is_periodic());
  CHECK(x.period() == M(4, 5));
  CHECK_FALSE(testgen::first_disagreement(x, oracle_sharp(y, a, -2, 16 + 15)).has_value());
}

TEST_CASE("odot dispatch") {
  check_series(odot(S("5d2"), S("3d2")), "8d2");
  check_series(odot(S("0d1 + (2d3)(3d3)*"), S("(1d2 + 4d5)(4d6)*")),
               "1d1 + (3d2 + 6d3 + 9d5 + 10d6)(10d6)*");
  check_series(odot(S("1d2 + (3d4)(2d5)*"), S("3d4 + 4dinf")), "4d2 + 6d4 + (9d9)(2d5)*");
  check_series(odot(S("1d2 + (3d4)(2d5)*"), S("3d4 + 4d8")), "4d2 + 6d4 + 9d8");
  check_series(odot(S("-1d0 + (5d2)(2d1)*"), S("-1d-5 + (3d0)(1d2)*")),
               "-2d-5 + 2d0 + (9d2 + 12d3)(5d2)*");
}

TEST_CASE("odot absorption") {
  CHECK(odot(S("eps"), S("(0d1 + 1d3)(2d5)*")).is_eps());
  CHECK(odot(S("(0d1 + 1d3)(2d5)*"), S("eps")).is_eps());
  CHECK(odot(S("top"), S("top")).is_top());
  CHECK(odot(S("top"), S("(0d1 + 1d3)(2d5)*")).is_top());
  CHECK(odot(S("top"), S("3dinf")).is_top());
  // against a finite support, the all--inf map stays -inf only on that
  // support and is +inf past it
  check_series(odot(S("top"), S("3d4")), "-infd4");
}

TEST_CASE("sharp dispatch") {
  check_series(sharp(S("5d2"), S("3d2")), "2dinf");
  check_series(sharp(S("-3d-1 + -1d2 + 3d4"), S("-1d1 + 0d3 + 2d4")), "-2d-1 + 0d2 + 3dinf");
  check_series(sharp(S("-1d0 + (5d2)(2d1)*"), S("-1d-5 + (3d0)(1d2)*")),
               "0d0 + (1d2 + 2d3)(3d2)*");
  check_series(sharp(S("1d1 + 3d4 + 5dinf"), S("0d0 + 1d2 + 2d6 + 3dinf")),
               "1d1 + 2d4 + 3dinf");
}

TEST_CASE("sharp degenerate operands") {
  CHECK(sharp(S("top"), S("3d4")).is_top());
  CHECK(sharp(S("(0d1 + 1d3)(2d5)*"), S("eps")).is_top());
  CHECK(sharp(S("eps"), S("3d4")).is_eps());
  CHECK(sharp(S("3d4"), S("top")).is_eps());
  // a -inf start in the left operand survives against the all--inf divisor
  Series y = Series::polynomial(Polynomial::from_terms({{kNeg, F(2)}, M(4, 6)}));
  check_series(sharp(y, S("top")), "-infd2");
}

TEST_CASE("sharp against a zero constant returns the operand") {
  testgen::Rng rng(202);
  for (int i = 0; i < 50; ++i) {
    Series y = testgen::random_operand(rng);
    CAPTURE(i);
    CHECK(equals(sharp(y, S("0dinf")), y));
  }
}

TEST_CASE("sharp rejects a shared unbounded start") {
  Series y = Series::polynomial(Polynomial::from_terms({{kNeg, F(0)}, M(1, 5)}));
  Series a = Series::polynomial(Polynomial::from_terms({{kNeg, F(2)}, M(0, 9)}));
  CHECK_THROWS_AS(sharp(y, a), CommonInfinityError);
  try {
    sharp(y, a);
  } catch (const CommonInfinityError& e) {
    CHECK(e.witness_time() == F(0));
  }
}

TEST_CASE("flat dispatch") {
  OpOutcome mono = flat(S("5d2"), S("3d2"));
  REQUIRE(mono.is_ok());
  check_series(mono.value(), "2d2");

  OpOutcome poly = flat(S("-3d-1 + -1d2 + 3d4"), S("-1d1 + 0d3 + 2d4"));
  REQUIRE(poly.is_ok());
  check_series(poly.value(), "-2d-1 + -1d2 + 1d4");

  OpOutcome periodic = flat(S("-1d0 + (5d2)(2d1)*"), S("-1d-5 + (3d0)(1d2)*"));
  REQUIRE(periodic.is_ok());
  check_series(periodic.value(), "-4d0 + (1d2 + 2d3)(3d2)*");

  OpOutcome constant = flat(S("2d2 + (6d3)(6d8)*"), S("1d1 + (5d4)(3d4)*"));
  REQUIRE(constant.is_ok());
  check_series(constant.value(), "-3d2 + 1dinf");

  OpOutcome steps = flat(S("1d1 + 3d4 + 5dinf"), S("0d0 + 1d2 + 2d6 + 3dinf"));
  REQUIRE(steps.is_ok());
  check_series(steps.value(), "0d1 + 1d4 + 2dinf");
}

TEST_CASE("flat undefined outcomes") {
  OpOutcome mono = flat(S("4d5"), S("1d3"));
  REQUIRE_FALSE(mono.is_ok());
  CHECK(mono.why().reason == "exponent 5 exceeds 3");
  CHECK(mono.why().witness_time == F(4));

  // a periodic left operand never stops growing, so a finite right support
  // cannot cover it
  OpOutcome grow = flat(S("(0d1 + 1d3)(2d5)*"), S("1d3"));
  REQUIRE_FALSE(grow.is_ok());
  CHECK(grow.why().reason == "exponent inf exceeds 3");
  CHECK(grow.why().witness_time == F(4));

  OpOutcome empty = flat(S("1d3"), S("eps"));
  REQUIRE_FALSE(empty.is_ok());
  CHECK(empty.why().reason == "exponent 3 exceeds -inf");

  OpOutcome bottom = flat(S("1d3"), S("top"));
  REQUIRE_FALSE(bottom.is_ok());
  CHECK(bottom.why().reason == "right operand is -inf where left is not +inf");

  // both outcomes confirm the obstruction at the witness time
  for (const OpOutcome* o : {&mono, &grow, &empty}) {
    ExtInt w = o->why().witness_time;
    CHECK(w.is_finite());
  }
}

TEST_CASE("flat degenerate operands") {
  CHECK(flat(S("eps"), S("3d4")).value().is_eps());
  CHECK(flat(S("eps"), S("eps")).value().is_eps());
  CHECK(flat(S("top"), S("(0d1 + 1d3)(2d5)*")).value().is_top());
  CHECK(flat(S("2d3 + 4dinf"), S("(0d1 + 1d3)(2d5)*")).value().is_top());
}

TEST_CASE("flat of a finite polynomial against a periodic divisor") {
  Series y = S("2d3 + 4d6");
  Series a = S("(0d1 + 1d3)(2d5)*");
  OpOutcome r = flat(y, a);
  REQUIRE(r.is_ok());
  auto w = testgen::covering_window({&y, &a, &r.value()});
  auto want = oracle_flat(y, a, w.lo, w.hi);
  REQUIRE(std::holds_alternative<CoeffWindow>(want));
  CHECK_FALSE(testgen::first_disagreement(r.value(), std::get<CoeffWindow>(want)).has_value());
}

TEST_CASE("flat of a periodic map against a constant divisor") {
  Series y = S("(0d1 + 1d3)(2d5)*");
  Series a = S("-2dinf");
  OpOutcome r = flat(y, a);
  REQUIRE(r.is_ok());
  check_series(r.value(), "(2d1 + 3d3)(2d5)*");
}

}  // TEST_SUITE

}  // namespace
}  // namespace counters
