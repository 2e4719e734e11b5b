// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/hadamard.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "detail.hpp"

namespace counters {

CommonInfinityError::CommonInfinityError(ExtInt witness_time)
    : std::domain_error("both operands are -inf at time " + to_string(witness_time)),
      witness_time_(witness_time) {}

// --- monomial kernels ---

Monomial odot_mono(Monomial a, Monomial b) {
  return {add_conv(a.nu, b.nu, InfConvention::to_pos_inf), min(a.tau, b.tau)};
}

Monomial sharp_mono(Monomial y, Monomial a) {
  return {sub_conv(y.nu, a.nu, InfConvention::to_neg_inf),
          y.tau < a.tau ? y.tau : ExtInt::pos_inf()};
}

std::optional<Monomial> flat_mono(Monomial y, Monomial a) {
  if (y.tau > a.tau) return std::nullopt;
  return Monomial{sub_conv(y.nu, a.nu, InfConvention::to_pos_inf), y.tau};
}

// --- polynomial kernels ---

Polynomial odot_poly(const Polynomial& a, const Polynomial& b, KernelStats* stats) {
  if (a.empty() || b.empty()) return Polynomial::eps();
  detail::StairBuilder out;
  ExtInt stop = min(a.back().tau, b.back().tau);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial prod = odot_mono(a.term(i), b.term(j));
    if (stats) ++stats->mono_ops;
    out.push(prod);
    if (prod.tau == stop) break;
    if (a.term(i).tau <= b.term(j).tau)
      ++i;
    else
      ++j;
  }
  return out.take();
}

Polynomial sharp_poly_mono(const Polynomial& y, Monomial a, KernelStats* stats) {
  detail::StairBuilder out;
  for (const Monomial& m : y.terms()) {
    if (stats) ++stats->mono_ops;
    if (m.tau < a.tau) {
      out.push({sub_conv(m.nu, a.nu, InfConvention::to_neg_inf), m.tau});
    } else {
      out.push({sub_conv(m.nu, a.nu, InfConvention::to_neg_inf), ExtInt::pos_inf()});
      break;
    }
  }
  return out.take();
}

Polynomial sharp_poly(const Polynomial& y, const Polynomial& a, KernelStats* stats) {
  if (y.empty()) return Polynomial::eps();
  Polynomial acc = Polynomial::from_terms({{ExtInt::neg_inf(), ExtInt::pos_inf()}});
  for (const Monomial& m : a.terms())
    acc = detail::poly_combine(acc, sharp_poly_mono(y, m, stats), false);
  return acc;
}

std::optional<Monomial> flat_mono_poly(Monomial y, const Polynomial& a) {
  for (const Monomial& m : a.terms())
    if (m.tau >= y.tau)
      return Monomial{sub_conv(y.nu, m.nu, InfConvention::to_pos_inf), y.tau};
  return std::nullopt;
}

namespace {

std::string exceeds_reason(ExtInt y_end, ExtInt a_end) {
  return "exponent " + to_string(y_end) + " exceeds " + to_string(a_end);
}

}  // namespace

OpOutcome flat_poly(const Polynomial& y, const Polynomial& a, KernelStats* stats) {
  if (y.empty()) return OpOutcome::ok(Series::eps());
  if (a.empty() || y.back().tau > a.back().tau) {
    ExtInt a_end = a.empty() ? ExtInt::neg_inf() : a.back().tau;
    ExtInt w = a.empty() ? (y.front().tau.is_finite() ? y.front().tau : ExtInt::finite(0))
                         : ExtInt::finite(checked_add(a.back().tau.value(), 1));
    return OpOutcome::undefined(exceeds_reason(y.back().tau, a_end), w);
  }
  detail::StairBuilder out;
  std::size_t j = 0;
  for (const Monomial& m : y.terms()) {
    while (a.term(j).tau < m.tau) ++j;
    if (stats) ++stats->mono_ops;
    out.push({sub_conv(m.nu, a.term(j).nu, InfConvention::to_pos_inf), m.tau});
  }
  return OpOutcome::ok(Series::polynomial(out.take()));
}

// --- periodic-operand parameters ---

DiffParams diff_params(const Series& s, const Series& s2) {
  if (!s.is_periodic() || !s2.is_periodic())
    throw std::logic_error("diff_params requires periodic operands");
  if (detail::first_coefficient(s).is_neg_inf() && detail::first_coefficient(s2).is_neg_inf())
    throw CommonInfinityError(min(detail::first_exponent(s), detail::first_exponent(s2)));
  std::int64_t taubar = lcm(s.period().tau, s2.period().tau).value();
  std::int64_t nubar =
      checked_sub(checked_mul(taubar / s.period().tau.value(), s.period().nu.value()),
                  checked_mul(taubar / s2.period().tau.value(), s2.period().nu.value()));
  std::int64_t tpbar = std::max(detail::pattern_start(s), detail::pattern_start(s2));
  std::int64_t t1bar =
      std::min(detail::first_exponent(s).value(), detail::first_exponent(s2).value());
  return {taubar, nubar, tpbar, t1bar};
}

namespace {

ExtInt diff_at(const Series& y, const Series& a, std::int64_t t) {
  return sub_conv(eval(y, ExtInt::finite(t)), eval(a, ExtInt::finite(t)),
                  InfConvention::to_neg_inf);
}

}  // namespace

std::int64_t kappa(const Series& y, const Series& a, const DiffParams& d) {
  if (d.nu_bar <= 0) throw std::logic_error("kappa requires a positive gain difference");

  // Transient window [t1_bar, tp_bar - 1]. Between two adjacent sampled
  // times at least one operand is constant, so the difference is monotone
  // there and its maximum lands on a sample.
  ExtInt M1 = ExtInt::neg_inf();
  std::int64_t wlo = d.t1_bar;
  std::int64_t whi = checked_sub(d.tp_bar, 1);
  if (wlo <= whi) {
    std::vector<std::int64_t> samples{wlo, whi};
    for (const Series* s : {&y, &a}) {
      for (std::int64_t e : detail::stored_exponents(*s)) {
        samples.push_back(e);
        samples.push_back(checked_add(e, 1));
      }
    }
    for (std::int64_t t : samples)
      if (wlo <= t && t <= whi) M1 = max(M1, diff_at(y, a, t));
  }

  ExtInt M2 = ExtInt::neg_inf();
  for (std::int64_t t = d.tp_bar; t <= checked_add(d.tp_bar, d.tau_bar - 1); ++t)
    M2 = max(M2, diff_at(y, a, t));

  ExtInt gap = sub_conv(M1, M2, InfConvention::to_neg_inf);
  if (gap.is_pos_inf()) throw std::logic_error("kappa: unbounded transient difference");
  if (!gap.is_finite() || gap.value() <= 0) return 1;
  return checked_add(1, ceil_div(gap.value(), d.nu_bar));
}

// --- series-level dispatch ---

namespace {

Series polyseries(Polynomial p) { return Series::polynomial(std::move(p)); }

bool has_inf_tail(const Polynomial& p) { return !p.empty() && p.back().tau.is_pos_inf(); }

// Last time the map still has a value: never for periodic series, the last
// exponent for polynomials.
ExtInt support_end(const Series& s) {
  if (s.is_periodic()) return ExtInt::pos_inf();
  return s.as_polynomial().empty() ? ExtInt::neg_inf() : s.as_polynomial().back().tau;
}

// Onset of the periodic view of an infinite-tail polynomial: just past its
// second-to-last exponent. A constant polynomial has no onset.
std::optional<std::int64_t> lift_onset(const Polynomial& p) {
  if (p.size() >= 2) return checked_add(p.term(p.size() - 2).tau.value(), 1);
  return std::nullopt;
}

}  // namespace

Series odot(const Series& a0, const Series& b0) {
  Series a = canonicalize(a0);
  Series b = canonicalize(b0);
  if (a.is_eps() || b.is_eps()) return Series::eps();
  if (a.is_top() || b.is_top()) {
    const Series& other = a.is_top() ? b : a;
    if (other.is_top()) return Series::top();
    // -inf wherever the other operand has a value, +inf past its support
    if (other.is_polynomial() && other.as_polynomial().back().tau.is_finite())
      return Series::monomial({ExtInt::neg_inf(), other.as_polynomial().back().tau});
    return Series::top();
  }
  if (a.is_polynomial() && b.is_polynomial())
    return polyseries(odot_poly(a.as_polynomial(), b.as_polynomial()));

  if (a.is_polynomial() || b.is_polynomial()) {
    const Series& s = a.is_polynomial() ? b : a;
    const Polynomial& p = (a.is_polynomial() ? a : b).as_polynomial();
    if (p.back().tau.is_finite())
      return polyseries(odot_poly(expand(s, p.back().tau.value()), p));
    std::int64_t tau = s.period().tau.value();
    std::int64_t tp = detail::pattern_start(s);
    if (auto onset = lift_onset(p)) tp = std::max(tp, *onset);
    std::int64_t H = checked_add(tp, tau - 1);
    Polynomial P = odot_poly(expand(s, H), expand(Series::polynomial(p), H));
    return detail::split_and_attach(P, tp, tau, s.period().nu.value());
  }

  std::int64_t taubar = lcm(a.period().tau, b.period().tau).value();
  std::int64_t nu2 =
      checked_add(checked_mul(taubar / a.period().tau.value(), a.period().nu.value()),
                  checked_mul(taubar / b.period().tau.value(), b.period().nu.value()));
  std::int64_t tp = std::max(detail::pattern_start(a), detail::pattern_start(b));
  std::int64_t H = checked_add(tp, taubar - 1);
  Polynomial P = odot_poly(expand(a, H), expand(b, H));
  return detail::split_and_attach(P, tp, taubar, nu2);
}

Series sharp(const Series& y0, const Series& a0) {
  Series y = canonicalize(y0);
  Series a = canonicalize(a0);
  if (y.is_top()) return Series::top();
  if (a.is_eps()) return Series::top();
  if (y.is_eps()) return Series::eps();
  if (a.is_top()) {
    // the result may be non-+inf only while y is -inf
    if (detail::first_coefficient(y).is_neg_inf())
      return Series::monomial({ExtInt::neg_inf(), detail::first_exponent(y)});
    return Series::eps();
  }
  ExtInt fcy = detail::first_coefficient(y);
  ExtInt fca = detail::first_coefficient(a);
  if (fca.is_neg_inf()) {
    if (!fcy.is_neg_inf()) return Series::eps();
    throw CommonInfinityError(min(detail::first_exponent(y), detail::first_exponent(a)));
  }

  if (y.is_polynomial() && a.is_polynomial())
    return polyseries(sharp_poly(y.as_polynomial(), a.as_polynomial()));

  if (y.is_periodic() && a.is_polynomial()) {
    const Polynomial& pa = a.as_polynomial();
    if (pa.back().tau.is_finite())
      return polyseries(sharp_poly(expand(y, pa.back().tau.value()), pa));
    // a is eventually constant: y keeps its own period
    std::int64_t tau = y.period().tau.value();
    std::int64_t nu = y.period().nu.value();
    std::int64_t tp0 = detail::pattern_start(y);
    if (auto onset = lift_onset(pa)) tp0 = std::max(tp0, *onset);
    std::int64_t t1 = min(detail::first_exponent(y), detail::first_exponent(a)).value();
    DiffParams d{tau, nu, tp0, t1};
    std::int64_t k = kappa(y, a, d);
    std::int64_t tp = checked_add(tp0, checked_mul(k, tau));
    std::int64_t H = checked_add(tp, tau - 1);
    Polynomial P = detail::clip(sharp_poly(expand(y, H), expand(a, H)), H);
    return detail::split_and_attach(P, tp, tau, nu);
  }

  if (y.is_polynomial()) {
    const Polynomial& py = y.as_polynomial();
    if (has_inf_tail(py)) {
      if (py.size() == 1)
        return polyseries(Polynomial::from_terms(
            {{sub_conv(py.front().nu, fca, InfConvention::to_neg_inf), ExtInt::pos_inf()}}));
      // past its last change point y is constant and the running maximum
      // can only decrease, so the horizon just past that point suffices
      std::int64_t H = checked_add(py.term(py.size() - 2).tau.value(), 1);
      return polyseries(sharp_poly(py, expand(a, H)));
    }
    return polyseries(sharp_poly(py, expand(a, checked_add(py.back().tau.value(), 1))));
  }

  DiffParams d = diff_params(y, a);
  if (d.nu_bar > 0) {
    std::int64_t k = kappa(y, a, d);
    std::int64_t tp = checked_add(d.tp_bar, checked_mul(k, d.tau_bar));
    std::int64_t H = checked_add(tp, d.tau_bar - 1);
    Polynomial P = detail::clip(sharp_poly(expand(y, H), expand(a, H)), H);
    return detail::split_and_attach(P, tp, d.tau_bar, d.nu_bar);
  }
  // gain difference <= 0: the running maximum never grows past the first
  // full window, so the truncated residual is already the whole result
  std::int64_t H = checked_add(d.tp_bar, d.tau_bar - 1);
  return polyseries(sharp_poly(expand(y, H), expand(a, H)));
}

OpOutcome flat(const Series& y0, const Series& a0) {
  Series y = canonicalize(y0);
  Series a = canonicalize(a0);
  if (y.is_eps()) return OpOutcome::ok(Series::eps());
  if (a.is_eps()) {
    ExtInt fe = detail::first_exponent(y);
    return OpOutcome::undefined(exceeds_reason(support_end(y), ExtInt::neg_inf()),
                                fe.is_finite() ? fe : ExtInt::finite(0));
  }
  if (detail::first_coefficient(a).is_neg_inf()) {
    ExtInt w = min(detail::first_exponent(y), detail::first_exponent(a));
    return OpOutcome::undefined("right operand is -inf where left is not +inf",
                                w.is_finite() ? w : ExtInt::finite(0));
  }

  if (a.is_polynomial() && a.as_polynomial().back().tau.is_finite()) {
    std::int64_t ta = a.as_polynomial().back().tau.value();
    if (y.is_polynomial() && y.as_polynomial().back().tau <= ExtInt::finite(ta))
      return flat_poly(y.as_polynomial(), a.as_polynomial());
    return OpOutcome::undefined(exceeds_reason(support_end(y), ExtInt::finite(ta)),
                                ExtInt::finite(checked_add(ta, 1)));
  }

  if (y.is_polynomial() && a.is_polynomial())
    return flat_poly(y.as_polynomial(), a.as_polynomial());

  if (y.is_polynomial()) {
    const Polynomial& py = y.as_polynomial();
    if (has_inf_tail(py)) return OpOutcome::ok(Series::top());
    return flat_poly(py, expand(a, py.back().tau.value()));
  }

  if (a.is_polynomial()) {
    // a is eventually constant: the future minimum follows y itself
    const Polynomial& pa = a.as_polynomial();
    std::int64_t tau = y.period().tau.value();
    std::int64_t tp = detail::pattern_start(y);
    if (auto onset = lift_onset(pa)) tp = std::max(tp, *onset);
    std::int64_t H = checked_add(tp, tau - 1);
    OpOutcome P = flat_poly(expand(y, H), expand(a, H));
    return OpOutcome::ok(detail::split_and_attach(P.value().as_polynomial(), tp, tau,
                                                  y.period().nu.value()));
  }

  DiffParams d = diff_params(y, a);
  if (d.nu_bar > 0) {
    std::int64_t H = checked_add(d.tp_bar, d.tau_bar - 1);
    OpOutcome P = flat_poly(expand(y, H), expand(a, H));
    return OpOutcome::ok(
        detail::split_and_attach(P.value().as_polynomial(), d.tp_bar, d.tau_bar, d.nu_bar));
  }
  if (d.nu_bar < 0) return OpOutcome::ok(Series::top());

  // Equal gains: the difference repeats every tau_bar past tp_bar, so the
  // future minimum is constant there. One extra period lets the windowed
  // minimum wrap around the repeating values.
  std::int64_t H1 = checked_add(d.tp_bar, d.tau_bar - 1);
  std::int64_t H2 = checked_add(H1, d.tau_bar);
  OpOutcome P0 = flat_poly(expand(y, H2), expand(a, H2));
  Polynomial P = detail::clip(P0.value().as_polynomial(), H1);
  std::vector<Monomial> terms = P.terms();
  if (terms.empty()) return OpOutcome::ok(Series::eps());
  terms.back().tau = ExtInt::pos_inf();
  return OpOutcome::ok(polyseries(Polynomial::from_terms(std::move(terms))));
}

}  // namespace counters
