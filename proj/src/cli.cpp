// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/cli.hpp"

#include <charconv>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <variant>

#include "CLI11.hpp"

#include "counters/hadamard.hpp"
#include "counters/oracle.hpp"
#include "counters/series.hpp"
#include "counters/text.hpp"

namespace counters {

namespace {

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<ExtInt> parse_time(const std::string& s) {
  if (s == "inf") return ExtInt::pos_inf();
  if (s == "-inf") return ExtInt::neg_inf();
  if (auto v = parse_int(s)) return ExtInt::finite(*v);
  return std::nullopt;
}

nlohmann::ordered_json ext_json(ExtInt v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

struct Output {
  std::ostream& out;
  bool json = false;
  bool quiet = false;

  int result(const Series& s) {
    if (quiet) return 0;
    if (json)
      out << format_json(s).dump() << "\n";
    else
      out << format_text(s) << "\n";
    return 0;
  }

  int value(ExtInt v) {
    if (quiet) return 0;
    if (json)
      out << ext_json(v).dump() << "\n";
    else
      out << to_string(v) << "\n";
    return 0;
  }

  int undefined(const std::string& reason, ExtInt witness) {
    if (quiet) return 3;
    if (json) {
      nlohmann::ordered_json j;
      j["undefined"] = reason;
      j["witness"] = ext_json(witness);
      out << j.dump() << "\n";
    } else {
      out << "undefined: " << reason << "\n";
    }
    return 3;
  }

  int mismatch(const std::string& detail) {
    if (!quiet) out << "mismatch: " << detail << "\n";
    return 4;
  }
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

OpOutcome apply_op(OpKind op, const Series& a, const Series& b) {
  switch (op) {
    case OpKind::oplus_op: return OpOutcome::ok(oplus(a, b));
    case OpKind::wedge_op: return OpOutcome::ok(wedge(a, b));
    case OpKind::hadamard_op: return OpOutcome::ok(odot(a, b));
    case OpKind::hres_op: return OpOutcome::ok(sharp(a, b));
    case OpKind::hdres_op: return flat(a, b);
  }
  throw std::logic_error("apply_op: unknown operator");
}

// Test hook for the mismatch path: a visibly different but valid series.
Series perturbed(const Series& s) {
  if (s.is_eps() || s.is_top()) return Series::e();
  auto bump = [](const Polynomial& p) {
    std::vector<Monomial> terms;
    for (const Monomial& m : p.terms())
      terms.push_back(
          {m.nu.is_finite() ? ExtInt::finite(checked_add(m.nu.value(), 1)) : m.nu, m.tau});
    return Polynomial::from_terms(std::move(terms));
  };
  if (s.is_periodic()) return Series::periodic(bump(s.transient()), bump(s.pattern()), s.period());
  return Series::polynomial(bump(s.as_polynomial()));
}

// Reference window for one operator application, or the oracle's objection.
std::variant<CoeffWindow, Undefined> reference_window(OpKind op, const Series& a,
                                                      const Series& b, std::int64_t lo,
                                                      std::int64_t hi) {
  switch (op) {
    case OpKind::oplus_op:
    case OpKind::wedge_op: {
      CoeffWindow w{lo, hi, {}};
      for (std::int64_t t = lo; t <= hi; ++t) {
        ExtInt va = eval(a, ExtInt::finite(t));
        ExtInt vb = eval(b, ExtInt::finite(t));
        w.values.push_back(op == OpKind::oplus_op ? min(va, vb) : max(va, vb));
      }
      return w;
    }
    case OpKind::hadamard_op: return oracle_odot(a, b, lo, hi);
    case OpKind::hres_op: return oracle_sharp(a, b, lo, hi);
    case OpKind::hdres_op: return oracle_flat(a, b, lo, hi);
  }
  throw std::logic_error("reference_window: unknown operator");
}

int run_check(const Expr& e, std::int64_t lo, std::int64_t hi, bool perturb, Output& o) {
  if (e.is_literal()) {
    Series result = perturb ? perturbed(e.series()) : e.series();
    CoeffWindow want = window_of(e.series(), lo, hi);
    CoeffWindow got = window_of(result, lo, hi);
    for (std::int64_t t = lo; t <= hi; ++t)
      if (got.at(t) != want.at(t))
        return o.mismatch("at t=" + std::to_string(t) + ": result " + to_string(got.at(t)) +
                          ", oracle " + to_string(want.at(t)));
    return o.result(result);
  }

  OpOutcome l = evaluate(e.lhs());
  if (!l.is_ok()) return o.undefined(l.why().reason, l.why().witness_time);
  OpOutcome r = evaluate(e.rhs());
  if (!r.is_ok()) return o.undefined(r.why().reason, r.why().witness_time);

  std::variant<CoeffWindow, Undefined> want = reference_window(e.op(), l.value(), r.value(), lo, hi);
  OpOutcome res = apply_op(e.op(), l.value(), r.value());
  if (!res.is_ok()) {
    if (std::holds_alternative<Undefined>(want))
      return o.undefined(res.why().reason, res.why().witness_time);
    return o.mismatch("result undefined (" + res.why().reason + ") but the oracle defines it");
  }
  if (std::holds_alternative<Undefined>(want)) {
    const Undefined& u = std::get<Undefined>(want);
    return o.mismatch("result defined but the oracle reports '" + u.reason + "' at t=" +
                      to_string(u.witness_time));
  }

  Series result = perturb ? perturbed(res.value()) : res.value();
  CoeffWindow got = window_of(result, lo, hi);
  const CoeffWindow& w = std::get<CoeffWindow>(want);
  for (std::int64_t t = lo; t <= hi; ++t)
    if (got.at(t) != w.at(t))
      return o.mismatch("at t=" + std::to_string(t) + ": result " + to_string(got.at(t)) +
                        ", oracle " + to_string(w.at(t)));
  return o.result(result);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"calculator for counters: min-plus series in the delta domain"};
  app.name("counters");
  app.require_subcommand(1);

  bool json = false, quiet = false, perturb = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--quiet", quiet, "suppress normal output");

  std::string expr_text, to_text, at_text, window_text;

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  cmd_eval->add_option("expr", expr_text, "expression, or - for stdin")->required();

  CLI::App* cmd_expand = app.add_subcommand("expand", "truncate a series to a polynomial");
  cmd_expand->add_option("series", expr_text, "series literal, or - for stdin")->required();
  cmd_expand->add_option("--to", to_text, "inclusive horizon")->required();

  CLI::App* cmd_coeff = app.add_subcommand("coeff", "coefficient at one time");
  cmd_coeff->add_option("series", expr_text, "series literal, or - for stdin")->required();
  cmd_coeff->add_option("-t", at_text, "time (integer, inf, or -inf)")->required();

  CLI::App* cmd_check =
      app.add_subcommand("check", "evaluate and cross-check against the pointwise oracle");
  cmd_check->add_option("expr", expr_text, "expression, or - for stdin")->required();
  cmd_check->add_option("--window", window_text, "inclusive window L:H")->required();
  cmd_check->add_flag("--perturb", perturb)->group("");

  for (CLI::App* sc : {cmd_eval, cmd_expand, cmd_coeff, cmd_check}) sc->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.get_name() << ": " << e.what() << "\n";
    return 1;
  }

  if (expr_text == "-") expr_text = read_all(std::cin);
  Output o{out, json, quiet};

  try {
    if (*cmd_eval) {
      OpOutcome res = evaluate(parse(expr_text));
      if (!res.is_ok()) return o.undefined(res.why().reason, res.why().witness_time);
      return o.result(res.value());
    }

    if (*cmd_expand) {
      auto to = parse_int(to_text);
      if (!to) {
        err << "usage error: --to expects an integer\n";
        return 1;
      }
      return o.result(Series::polynomial(expand(parse_series(expr_text), *to)));
    }

    if (*cmd_coeff) {
      auto t = parse_time(at_text);
      if (!t) {
        err << "usage error: -t expects an integer, inf, or -inf\n";
        return 1;
      }
      return o.value(eval(parse_series(expr_text), *t));
    }

    std::size_t colon = window_text.find(':');
    std::optional<std::int64_t> lo, hi;
    if (colon != std::string::npos) {
      lo = parse_int(window_text.substr(0, colon));
      hi = parse_int(window_text.substr(colon + 1));
    }
    if (!lo || !hi) {
      err << "usage error: --window expects L:H with integer bounds\n";
      return 1;
    }
    return run_check(parse(expr_text), *lo, *hi, perturb, o);
  } catch (const ParseFailure& pf) {
    err << "parse error: " << pf.what() << "\n";
    return 2;
  } catch (const CommonInfinityError& ce) {
    return o.undefined(ce.what(), ce.witness_time());
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace counters
