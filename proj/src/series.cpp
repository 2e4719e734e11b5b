// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/series.hpp"

#include <algorithm>
#include <limits>

#include "detail.hpp"

namespace counters {

// --- Polynomial ---

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].nu.is_pos_inf())
      throw SeriesError("polynomial term with coefficient +inf");
    if (terms[i].tau.is_neg_inf())
      throw SeriesError("polynomial term with exponent -inf");
    if (i > 0 && !(terms[i - 1].nu < terms[i].nu))
      throw SeriesError("polynomial coefficients must be strictly increasing");
    if (i > 0 && !(terms[i - 1].tau < terms[i].tau))
      throw SeriesError("polynomial exponents must be strictly increasing");
  }
  return Polynomial(std::move(terms));
}

Polynomial Polynomial::from_unsorted_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.nu < b.nu;
  });
  detail::StairBuilder out;
  for (const Monomial& m : terms) out.push(m);
  return out.take();
}

ExtInt Polynomial::value_at(ExtInt t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                             [](const Monomial& m, ExtInt x) { return m.tau < x; });
  return it == terms_.end() ? ExtInt::pos_inf() : it->nu;
}

// --- Series ---

Series Series::eps() { return Series(); }

Series Series::top() {
  return polynomial(Polynomial::from_terms({{ExtInt::neg_inf(), ExtInt::pos_inf()}}));
}

Series Series::e() {
  return polynomial(Polynomial::from_terms({{ExtInt::finite(0), ExtInt::finite(0)}}));
}

Series Series::monomial(Monomial m) {
  return polynomial(Polynomial::from_unsorted_terms({m}));
}

Series Series::polynomial(Polynomial p) {
  Series s;
  s.transient_ = std::move(p);
  return s;
}

Series Series::periodic(Polynomial transient, Polynomial pattern, Monomial period) {
  if (pattern.empty()) throw SeriesError("periodic form requires a nonempty pattern");
  if (pattern.front().nu.is_inf() || pattern.back().tau.is_inf())
    throw SeriesError("pattern entries must all be finite");
  if (!period.nu.is_finite() || period.nu.value() < 0)
    throw SeriesError("period gain must be finite and >= 0");
  if (!period.tau.is_finite() || period.tau.value() < 1)
    throw SeriesError("period length must be finite and >= 1");
  Series s;
  s.transient_ = std::move(transient);
  s.pattern_ = std::move(pattern);
  s.period_ = period;
  s.periodic_ = true;
  return s;
}

bool Series::is_top() const {
  return !periodic_ && transient_.size() == 1 && transient_.front().nu.is_neg_inf() &&
         transient_.front().tau.is_pos_inf();
}

const Monomial& Series::period() const {
  if (!periodic_) throw std::logic_error("period() on a polynomial series");
  return period_;
}

const Polynomial& Series::as_polynomial() const {
  if (periodic_) throw std::logic_error("as_polynomial() on a periodic series");
  return transient_;
}

bool operator==(const Series& a, const Series& b) {
  if (a.periodic_ != b.periodic_) return false;
  if (a.transient_ != b.transient_) return false;
  if (!a.periodic_) return true;
  return a.pattern_ == b.pattern_ && a.period_ == b.period_;
}

// --- OpOutcome ---

OpOutcome OpOutcome::ok(Series s) {
  OpOutcome o;
  o.ok_ = true;
  o.value_ = std::move(s);
  return o;
}

OpOutcome OpOutcome::undefined(std::string reason, ExtInt witness_time) {
  OpOutcome o;
  o.why_ = Undefined{std::move(reason), witness_time};
  return o;
}

const Series& OpOutcome::value() const {
  if (!ok_) throw std::logic_error("OpOutcome::value on an undefined outcome");
  return value_;
}

const Undefined& OpOutcome::why() const {
  if (ok_) throw std::logic_error("OpOutcome::why on a defined outcome");
  return why_;
}

// --- evaluation ---

namespace {

// Minimum over all shifted pattern copies at a finite time t.
ExtInt closure_value(const Series& s, std::int64_t t) {
  std::int64_t tau = s.period().tau.value();
  std::int64_t nu = s.period().nu.value();
  ExtInt best = ExtInt::pos_inf();
  for (const Monomial& m : s.pattern().terms()) {
    std::int64_t k = 0;
    std::int64_t Ti = m.tau.value();
    if (t > Ti) k = ceil_div(checked_sub(t, Ti), tau);
    ExtInt cand = ExtInt::finite(checked_add(m.nu.value(), checked_mul(k, nu)));
    best = min(best, cand);
  }
  return best;
}

}  // namespace

ExtInt eval(const Series& s, ExtInt t) {
  if (t.is_neg_inf()) return ExtInt::neg_inf();
  if (t.is_pos_inf()) return s.is_top() ? ExtInt::neg_inf() : ExtInt::pos_inf();
  ExtInt v = s.transient().value_at(t);
  if (s.is_periodic()) v = min(v, closure_value(s, t.value()));
  return v;
}

// --- internal helpers ---

namespace detail {

void StairBuilder::push(Monomial m) {
  if (m.nu.is_pos_inf() || m.tau.is_neg_inf()) return;
  while (!terms_.empty() && terms_.back().nu >= m.nu) terms_.pop_back();
  if (!terms_.empty() && terms_.back().tau >= m.tau) return;
  terms_.push_back(m);
}

Polynomial StairBuilder::take() {
  Polynomial p = Polynomial::from_terms(std::move(terms_));
  terms_.clear();
  return p;
}

namespace {

ExtInt tail_value(const Polynomial& p) {
  if (!p.empty() && p.back().tau.is_pos_inf()) return p.back().nu;
  return ExtInt::pos_inf();
}

}  // namespace

Polynomial poly_combine(const Polynomial& a, const Polynomial& b, bool use_min) {
  std::vector<ExtInt> xs;
  for (const Monomial& m : a.terms())
    if (m.tau.is_finite()) xs.push_back(m.tau);
  for (const Monomial& m : b.terms())
    if (m.tau.is_finite()) xs.push_back(m.tau);
  std::sort(xs.begin(), xs.end(), [](ExtInt x, ExtInt y) { return x < y; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  StairBuilder out;
  for (ExtInt e : xs) {
    ExtInt va = a.value_at(e);
    ExtInt vb = b.value_at(e);
    out.push({use_min ? min(va, vb) : max(va, vb), e});
  }
  ExtInt tail = use_min ? min(tail_value(a), tail_value(b))
                        : max(tail_value(a), tail_value(b));
  out.push({tail, ExtInt::pos_inf()});
  return out.take();
}

Polynomial clip(const Polynomial& p, std::int64_t up_to) {
  return expand(Series::polynomial(p), up_to);
}

Series split_and_attach(const Polynomial& P, std::int64_t tp, std::int64_t tau,
                        std::int64_t nu) {
  ExtInt tpe = ExtInt::finite(tp);
  ExtInt hie = ExtInt::finite(checked_add(tp, tau - 1));
  std::vector<Monomial> head, window;
  for (const Monomial& m : P.terms()) {
    if (m.tau < tpe)
      head.push_back(m);
    else if (m.tau <= hie)
      window.push_back(m);
  }
  if (nu == 0) {
    head.push_back({P.value_at(tpe), ExtInt::pos_inf()});
    return canonicalize(Series::polynomial(Polynomial::from_unsorted_terms(std::move(head))));
  }
  if (window.empty()) throw std::logic_error("split_and_attach: empty pattern window");
  return canonicalize(Series::periodic(Polynomial::from_terms(std::move(head)),
                                       Polynomial::from_terms(std::move(window)),
                                       {ExtInt::finite(nu), ExtInt::finite(tau)}));
}

ExtInt first_exponent(const Series& s) {
  if (!s.transient().empty()) return s.transient().front().tau;
  if (s.is_periodic()) return s.pattern().front().tau;
  return ExtInt::pos_inf();
}

ExtInt first_coefficient(const Series& s) {
  if (!s.transient().empty()) return s.transient().front().nu;
  if (s.is_periodic()) return s.pattern().front().nu;
  return ExtInt::pos_inf();
}

std::int64_t pattern_start(const Series& s) { return s.pattern().front().tau.value(); }

std::vector<std::int64_t> stored_exponents(const Series& s) {
  std::vector<std::int64_t> out;
  for (const Monomial& m : s.transient().terms())
    if (m.tau.is_finite()) out.push_back(m.tau.value());
  for (const Monomial& m : s.pattern().terms()) out.push_back(m.tau.value());
  return out;
}

std::vector<Monomial> change_points_in(const Series& s, std::int64_t lo, std::int64_t hi) {
  if (s.is_eps() || lo > hi) return {};
  std::vector<std::int64_t> cand;
  for (const Monomial& m : s.transient().terms()) {
    if (!m.tau.is_finite()) continue;
    std::int64_t e = m.tau.value();
    if (lo <= e && e <= hi) cand.push_back(e);
  }
  if (s.is_periodic()) {
    std::int64_t step = s.period().tau.value();
    for (const Monomial& m : s.pattern().terms()) {
      std::int64_t Ti = m.tau.value();
      std::int64_t k0 = lo > Ti ? ceil_div(checked_sub(lo, Ti), step) : 0;
      for (std::int64_t k = k0;; ++k) {
        __int128 c = static_cast<__int128>(Ti) + static_cast<__int128>(k) * step;
        if (c > hi) break;
        cand.push_back(static_cast<std::int64_t>(c));
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Monomial> out;
  for (std::int64_t c : cand) {
    ExtInt v = eval(s, ExtInt::finite(c));
    if (v != eval(s, ExtInt::finite(checked_add(c, 1)))) out.push_back({v, ExtInt::finite(c)});
  }
  return out;
}

Rate rate_of(const Series& s) {
  if (s.is_periodic()) return {false, s.period().nu.value(), s.period().tau.value()};
  if (!s.as_polynomial().empty() && s.as_polynomial().back().tau.is_pos_inf())
    return {false, 0, 1};
  return {true, 0, 1};
}

std::int64_t shape_horizon(const Series& s) {
  if (s.is_periodic()) return pattern_start(s);
  const Polynomial& p = s.as_polynomial();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    if (it->tau.is_finite()) return it->tau.value();
  return 0;
}

std::int64_t tail_period(const Series& s) {
  return s.is_periodic() ? s.period().tau.value() : 1;
}

int compare(Rate a, Rate b) {
  if (a.infinite && b.infinite) return 0;
  if (a.infinite) return 1;
  if (b.infinite) return -1;
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  return lhs > rhs ? 1 : 0;
}

}  // namespace detail

// --- expand ---

Polynomial expand(const Series& s, std::int64_t up_to) {
  ExtInt T = ExtInt::finite(up_to);
  if (s.is_eps()) return Polynomial::eps();
  if (s.is_polynomial()) {
    const Polynomial& p = s.as_polynomial();
    if (p.back().tau <= T) return p;
    std::vector<Monomial> out;
    for (const Monomial& m : p.terms()) {
      if (m.tau < T) {
        out.push_back(m);
      } else {
        out.push_back({m.nu, T});
        break;
      }
    }
    return Polynomial::from_terms(std::move(out));
  }
  std::int64_t lo = std::min(detail::first_exponent(s).value(), up_to);
  std::vector<Monomial> cps = detail::change_points_in(s, lo, up_to);
  if (cps.empty() || cps.back().tau < T) cps.push_back({eval(s, T), T});
  return Polynomial::from_terms(std::move(cps));
}

// --- canonicalize ---

Series canonicalize(const Series& s) {
  if (s.is_polynomial()) return s;

  std::int64_t tau = s.period().tau.value();
  std::int64_t nu = s.period().nu.value();

  // A transient that never vanishes caps the series; rebuild it as a
  // pointwise min of the two parts.
  if (!s.transient().empty() && s.transient().back().tau.is_pos_inf()) {
    Series bare = Series::periodic(Polynomial::eps(), s.pattern(), s.period());
    return oplus(Series::polynomial(s.transient()), bare);
  }

  if (nu == 0) {
    // Every pattern copy repeats the same values: the smallest pattern
    // coefficient persists forever.
    std::vector<Monomial> terms = s.transient().terms();
    terms.push_back({s.pattern().front().nu, ExtInt::pos_inf()});
    return Series::polynomial(Polynomial::from_unsorted_terms(std::move(terms)));
  }

  // Earliest time from which the stored shape guarantees the (nu, tau) law,
  // then scan downwards for the true onset.
  std::int64_t T1 = s.pattern().front().tau.value();
  std::int64_t Tl = s.pattern().back().tau.value();
  std::int64_t t_star = std::max(T1, checked_add(checked_sub(Tl, tau), 1));
  if (!s.transient().empty())
    t_star = std::max(t_star, checked_add(s.transient().back().tau.value(), 1));
  while (true) {
    ExtInt prev = eval(s, ExtInt::finite(checked_sub(t_star, 1)));
    if (!prev.is_finite()) break;
    ExtInt shifted = eval(s, ExtInt::finite(checked_add(checked_sub(t_star, 1), tau)));
    if (shifted != ExtInt::finite(checked_add(prev.value(), nu))) break;
    --t_star;
  }

  std::vector<Monomial> pat =
      detail::change_points_in(s, t_star, checked_add(t_star, tau - 1));
  std::int64_t lo = std::min(detail::first_exponent(s).value(), t_star);
  std::vector<Monomial> head = detail::change_points_in(s, lo, checked_sub(t_star, 1));
  return Series::periodic(Polynomial::from_terms(std::move(head)),
                          Polynomial::from_terms(std::move(pat)), s.period());
}

// --- oplus / wedge ---

namespace {

using detail::pattern_start;
using detail::poly_combine;
using detail::split_and_attach;

// Periodic shape of a rated operand: a periodic series keeps its own
// parameters; a polynomial with an infinite tail behaves as gain 0 over
// length 1 from just past its last change point (no onset when constant).
struct RatedView {
  bool has_onset = false;
  std::int64_t onset = 0;
  std::int64_t tau = 1;
  std::int64_t nu = 0;
};

RatedView rated_view(const Series& s) {
  RatedView v;
  if (s.is_periodic()) {
    v.has_onset = true;
    v.onset = pattern_start(s);
    v.tau = s.period().tau.value();
    v.nu = s.period().nu.value();
    return v;
  }
  const Polynomial& p = s.as_polynomial();
  if (p.size() >= 2) {
    v.has_onset = true;
    v.onset = checked_add(p.term(p.size() - 2).tau.value(), 1);
  }
  return v;
}

Series lattice_combine(const Series& a, const Series& b, bool use_min) {
  if (a.is_polynomial() && b.is_polynomial())
    return Series::polynomial(poly_combine(a.as_polynomial(), b.as_polynomial(), use_min));

  // One periodic operand against a polynomial that vanishes.
  if (a.is_polynomial() || b.is_polynomial()) {
    const Series& p = a.is_polynomial() ? a : b;
    const Series& s = a.is_polynomial() ? b : a;
    const Polynomial& pp = p.as_polynomial();
    if (pp.back().tau.is_finite()) {
      std::int64_t pm = pp.back().tau.value();
      if (use_min) {
        std::int64_t tp = std::max(pattern_start(s), checked_add(pm, 1));
        std::int64_t tau = s.period().tau.value();
        std::int64_t H = checked_add(tp, tau - 1);
        Polynomial P = poly_combine(expand(s, H), pp, true);
        return split_and_attach(P, tp, tau, s.period().nu.value());
      }
      return Series::polynomial(poly_combine(pp, expand(s, pm), false));
    }
  }

  // Both operands are rated: periodic, or a polynomial with an infinite tail.
  RatedView va = rated_view(a);
  RatedView vb = rated_view(b);
  std::int64_t taubar = lcm(ExtInt::finite(va.tau), ExtInt::finite(vb.tau)).value();
  std::int64_t nua = checked_mul(taubar / va.tau, va.nu);
  std::int64_t nub = checked_mul(taubar / vb.tau, vb.nu);
  std::int64_t nudiff = checked_sub(nua, nub);
  std::int64_t tpbar;
  if (va.has_onset && vb.has_onset)
    tpbar = std::max(va.onset, vb.onset);
  else
    tpbar = va.has_onset ? va.onset : vb.onset;

  if (nudiff == 0) {
    std::int64_t H = checked_add(tpbar, taubar - 1);
    Polynomial P = poly_combine(expand(a, H), expand(b, H), use_min);
    return split_and_attach(P, tpbar, taubar, nua);
  }

  // The operand that eventually wins the pointwise combination: for min the
  // slower one, for max the faster one.
  bool a_faster = nudiff > 0;
  bool a_dominates = use_min ? !a_faster : a_faster;
  const Series& dom = a_dominates ? a : b;
  const Series& oth = a_dominates ? b : a;
  std::int64_t absdiff = nudiff > 0 ? nudiff : -nudiff;

  std::int64_t worst = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t t = tpbar; t <= checked_add(tpbar, taubar - 1); ++t) {
    std::int64_t d = eval(dom, ExtInt::finite(t)).value();
    std::int64_t o = eval(oth, ExtInt::finite(t)).value();
    worst = std::max(worst, use_min ? checked_sub(d, o) : checked_sub(o, d));
  }
  std::int64_t kstar = checked_add(1, std::max<std::int64_t>(0, ceil_div(worst, absdiff)));

  std::int64_t tp = checked_add(tpbar, checked_mul(kstar, taubar));
  std::int64_t H = checked_add(tp, taubar - 1);
  Polynomial P = poly_combine(expand(a, H), expand(b, H), use_min);
  RatedView vd = a_dominates ? va : vb;
  std::int64_t nu2 = checked_mul(taubar / vd.tau, vd.nu);
  return split_and_attach(P, tp, taubar, nu2);
}

}  // namespace

Series oplus(const Series& a0, const Series& b0) {
  Series a = canonicalize(a0);
  Series b = canonicalize(b0);
  if (a.is_top() || b.is_top()) return Series::top();
  if (a.is_eps()) return b;
  if (b.is_eps()) return a;
  return lattice_combine(a, b, true);
}

Series wedge(const Series& a0, const Series& b0) {
  Series a = canonicalize(a0);
  Series b = canonicalize(b0);
  if (a.is_eps() || b.is_eps()) return Series::eps();
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  return lattice_combine(a, b, false);
}

// --- order and equality ---

bool leq(const Series& a0, const Series& b0) {
  Series a = canonicalize(a0);
  Series b = canonicalize(b0);
  if (eval(a, ExtInt::pos_inf()) < eval(b, ExtInt::pos_inf())) return false;
  if (detail::compare(detail::rate_of(a), detail::rate_of(b)) < 0) return false;

  std::int64_t lo = 0;
  ExtInt fa = detail::first_exponent(a);
  ExtInt fb = detail::first_exponent(b);
  if (fa.is_finite()) lo = std::min(lo, fa.value());
  if (fb.is_finite()) lo = std::min(lo, fb.value());
  lo = checked_sub(lo, 1);
  std::int64_t L =
      lcm(ExtInt::finite(detail::tail_period(a)), ExtInt::finite(detail::tail_period(b))).value();
  std::int64_t hi = std::max(detail::shape_horizon(a), detail::shape_horizon(b));
  hi = checked_add(hi, checked_mul(2, L));
  for (std::int64_t t = lo; t <= hi; ++t)
    if (eval(a, ExtInt::finite(t)) < eval(b, ExtInt::finite(t))) return false;
  return true;
}

bool equals(const Series& a0, const Series& b0) {
  Series a = canonicalize(a0);
  Series b = canonicalize(b0);
  if (a == b) return true;
  if (!a.is_periodic() || !b.is_periodic()) return false;
  // Same throughput is necessary; compare nu/tau as exact rationals.
  __int128 lhs = static_cast<__int128>(a.period().nu.value()) * b.period().tau.value();
  __int128 rhs = static_cast<__int128>(b.period().nu.value()) * a.period().tau.value();
  if (lhs != rhs) return false;
  std::int64_t lo =
      checked_sub(std::min(detail::first_exponent(a).value(), detail::first_exponent(b).value()), 1);
  std::int64_t L = lcm(a.period().tau, b.period().tau).value();
  std::int64_t hi = checked_add(std::max(detail::pattern_start(a), detail::pattern_start(b)),
                                checked_mul(2, L));
  for (std::int64_t t = lo; t <= hi; ++t)
    if (eval(a, ExtInt::finite(t)) != eval(b, ExtInt::finite(t))) return false;
  return true;
}

}  // namespace counters
