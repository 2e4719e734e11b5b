// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace counters {

ExtInt CoeffWindow::at(std::int64_t t) const {
  if (t < lo || t > hi) throw std::out_of_range("CoeffWindow::at: time outside window");
  return values[static_cast<std::size_t>(t - lo)];
}

CoeffWindow window_of(const Series& s, std::int64_t lo, std::int64_t hi) {
  CoeffWindow w{lo, hi, {}};
  for (std::int64_t t = lo; t <= hi; ++t) w.values.push_back(eval(s, ExtInt::finite(t)));
  return w;
}

namespace {

// Eventual behaviour of a raw series, derived from the evaluation rule
// alone: past `settled`, values repeat with gain `num` every `den` steps
// (+inf stays +inf). `reaches_pos_inf` marks maps with bounded support.
struct TailModel {
  bool reaches_pos_inf = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t settled = 0;
};

std::int64_t last_finite_exponent(const Polynomial& p) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    if (it->tau.is_finite()) return it->tau.value();
  return 0;
}

TailModel tail_model(const Series& s) {
  TailModel m;
  if (s.is_polynomial()) {
    const Polynomial& p = s.as_polynomial();
    m.reaches_pos_inf = p.empty() || p.back().tau.is_finite();
    m.settled = last_finite_exponent(p);
    return m;
  }

  const Polynomial& tr = s.transient();
  std::int64_t tau = s.period().tau.value();
  std::int64_t nu = s.period().nu.value();
  std::int64_t last_pat = s.pattern().back().tau.value();

  if (tr.empty() || tr.back().tau.is_finite()) {
    m.num = nu;
    m.den = tau;
    m.settled = std::max(last_pat, tr.empty() ? 0 : tr.back().tau.value());
    return m;
  }

  // The transient never vanishes, so its final coefficient caps the series.
  ExtInt cap = tr.back().nu;
  std::int64_t before_cap = last_finite_exponent(tr);
  if (cap.is_neg_inf() || nu == 0) {
    m.settled = std::max(before_cap, last_pat);
    return m;
  }
  // Earliest time past which every repeated copy has climbed to the cap.
  std::int64_t settled = before_cap;
  for (const Monomial& pm : s.pattern().terms()) {
    std::int64_t gap = checked_sub(cap.value(), pm.nu.value());
    std::int64_t k = gap > 0 ? ceil_div(gap, nu) : 0;
    if (k > 0)
      settled = std::max(settled, checked_add(pm.tau.value(), checked_mul(tau, k - 1)));
  }
  m.settled = settled;
  return m;
}

// -1, 0, 1 comparison of eventual growth; bounded support counts as +inf.
int rate_compare(const TailModel& a, const TailModel& b) {
  if (a.reaches_pos_inf && b.reaches_pos_inf) return 0;
  if (a.reaches_pos_inf) return 1;
  if (b.reaches_pos_inf) return -1;
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  return lhs > rhs ? 1 : 0;
}

// One point below everything stored in either operand: all coefficients are
// constant before it, so scans starting there see the whole history.
std::int64_t scan_floor(const Series& x, const Series& y, std::int64_t lo) {
  std::int64_t f = lo;
  for (const Series* s : {&x, &y}) {
    if (!s->transient().empty() && s->transient().front().tau.is_finite())
      f = std::min(f, s->transient().front().tau.value());
    if (s->is_periodic()) f = std::min(f, s->pattern().front().tau.value());
  }
  return checked_sub(f, 1);
}

}  // namespace

CoeffWindow oracle_odot(const Series& a, const Series& b, std::int64_t lo, std::int64_t hi) {
  CoeffWindow w{lo, hi, {}};
  for (std::int64_t t = lo; t <= hi; ++t)
    w.values.push_back(add_conv(eval(a, ExtInt::finite(t)), eval(b, ExtInt::finite(t)),
                                InfConvention::to_pos_inf));
  return w;
}

CoeffWindow oracle_sharp(const Series& y, const Series& a, std::int64_t lo, std::int64_t hi) {
  CoeffWindow w{lo, hi, {}};
  ExtInt acc = ExtInt::neg_inf();
  for (std::int64_t t = scan_floor(y, a, lo); t <= hi; ++t) {
    acc = max(acc, sub_conv(eval(y, ExtInt::finite(t)), eval(a, ExtInt::finite(t)),
                            InfConvention::to_neg_inf));
    if (t >= lo) w.values.push_back(acc);
  }
  return w;
}

std::variant<CoeffWindow, Undefined> oracle_flat(const Series& y, const Series& a,
                                                 std::int64_t lo, std::int64_t hi) {
  TailModel my = tail_model(y);
  TailModel ma = tail_model(a);
  std::int64_t floor_t = scan_floor(y, a, lo);
  std::int64_t period = lcm(ExtInt::finite(my.den), ExtInt::finite(ma.den)).value();
  std::int64_t far = checked_add(std::max({hi, my.settled, ma.settled}),
                                 checked_mul(2, period));

  for (std::int64_t t = floor_t; t <= far; ++t) {
    ExtInt va = eval(a, ExtInt::finite(t));
    if (va.is_inf() && !eval(y, ExtInt::finite(t)).is_pos_inf())
      return Undefined{"right operand vanishes or is -inf where left does not",
                       ExtInt::finite(t)};
  }

  CoeffWindow w{lo, hi, {}};
  if (rate_compare(my, ma) < 0) {
    // The difference is unbounded below, so every suffix minimum is -inf.
    for (std::int64_t t = lo; t <= hi; ++t) w.values.push_back(ExtInt::neg_inf());
    return w;
  }
  for (std::int64_t t = lo; t <= hi; ++t) {
    ExtInt acc = ExtInt::pos_inf();
    for (std::int64_t u = t; u <= far; ++u)
      acc = min(acc, sub_conv(eval(y, ExtInt::finite(u)), eval(a, ExtInt::finite(u)),
                              InfConvention::to_pos_inf));
    w.values.push_back(acc);
  }
  return w;
}

}  // namespace counters
