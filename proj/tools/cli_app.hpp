#pragma once

// Command-line front end. run_cli() is kept separate from main() so the tests
// can drive it with captured streams.
//
// Exit codes: 0 success, 1 no convergence (or a verify threshold missed),
// 2 domain error, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bessel_series.hpp"

namespace bessel_series::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_no_convergence = 1;
inline constexpr int exit_domain_error = 2;
inline constexpr int exit_usage = 64;

/// Shortest decimal string that reads back to the same double.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline std::string format_bool(bool v) { return v ? "true" : "false"; }

using Row = std::vector<std::pair<std::string, std::string>>;

inline void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().size(); ++i) out << (i ? "," : "") << rows.front()[i].first;
  out << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string family = "C";
  int n = 0;
  double b = 1.0;
  double x = 0.0;
  double tol = 1e-10;
  std::int64_t max_terms = 1'000'000;
  bool fixed = false;
  std::string format = "plain";
  bool check = false;
};

struct EvalOutcome {
  nlohmann::ordered_json fields;
  int code = exit_ok;
};

inline void put(nlohmann::ordered_json& j, const std::string& key, double v) {
  if (std::isfinite(v)) {
    j[key] = v;
  } else {
    j[key] = nullptr;
  }
}

inline EvalOutcome evaluate(const EvalArgs& a, std::ostream& err) {
  EvalOptions opts;
  opts.tol = a.tol;
  opts.max_terms = a.max_terms;
  opts.mode = a.fixed ? TruncationMode::fixed_terms : TruncationMode::adaptive;

  EvalOutcome o;
  EvalResult r;
  int order = a.n;
  double oracle_arg = a.b * a.x;
  try {
    if (a.family == "b1") {
      oracle_arg = a.x;
      r = eval_at_b1(a.n, a.x, opts);
    } else if (a.family == "j0var") {
      order = 0;
      oracle_arg = a.x;
      r = eval_j0_variant(a.x, opts);
    } else {
      const auto fam = parse_family(a.family);
      if (!fam) throw InvalidArgument("unknown family '" + a.family + "'");
      r = eval_series({*fam, a.n, a.b, a.x}, opts);
    }
  } catch (const SeriesNoConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    r = e.partial();
    o.code = exit_no_convergence;
  }

  auto& j = o.fields;
  j["family"] = a.family;
  j["n"] = order;
  j["b"] = (a.family == "b1") ? 1.0 : (a.family == "j0var" ? std::sqrt(3.0) / 2.0 : a.b);
  j["x"] = a.x;
  put(j, "value", r.value);
  put(j, "bessel_value", r.bessel_value);
  j["terms_used"] = r.terms_used;
  j["last_index"] = r.last_index;
  put(j, "tail_bound", r.bessel_tail_bound);
  j["converged"] = r.converged;
  if (r.ill_conditioned) err << "warning: b^n < 1e-6, recovered J_n(bx) is ill-conditioned\n";
  if (a.check) {
    try {
      const double oracle = oracle_bessel_j(order, oracle_arg);
      put(j, "oracle", oracle);
      put(j, "abs_error", std::abs(r.bessel_value - oracle));
    } catch (const std::exception& e) {
      err << "oracle unavailable: " << e.what() << '\n';
      j["oracle"] = nullptr;
      j["abs_error"] = nullptr;
    }
  }
  return o;
}

inline std::string json_scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "nan";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return format_bool(v.get<bool>());
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

inline void print_eval(std::ostream& out, const EvalOutcome& o, const std::string& format) {
  if (format == "json") {
    out << o.fields.dump() << '\n';
    return;
  }
  Row row;
  for (const auto& [key, value] : o.fields.items()) row.emplace_back(key, json_scalar_text(value));
  if (format == "csv") {
    write_csv(out, {row});
    return;
  }
  for (const auto& [key, value] : row) out << key << ' ' << value << '\n';
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::vector<std::string> families{"A", "B", "C"};
  std::vector<int> orders{0, 1, 2, 3, 4, 5};
  std::vector<double> scales{0.25, 0.5, std::sqrt(3.0) / 2.0, 1.0};
  std::vector<double> arguments{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  double tol = 1e-10;
  std::int64_t max_terms = 1'000'000;
  bool fixed = false;
  unsigned threads = 1;
};

inline bool is_valid_spec(const SeriesSpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

inline std::vector<SeriesSpec> build_grid(const TableArgs& a) {
  std::vector<SeriesSpec> grid;
  for (const auto& name : a.families) {
    const auto fam = parse_family(name);
    if (!fam) throw InvalidArgument("unknown family '" + name + "'");
    for (int n : a.orders)
      for (double b : a.scales)
        for (double x : a.arguments) {
          const SeriesSpec spec{*fam, n, b, x};
          if (is_valid_spec(spec)) grid.push_back(spec);
        }
  }
  return grid;
}

inline Row record_row(const ConvergenceRecord& r) {
  return {{"family", std::string(to_string(r.spec.family))},
          {"n", std::to_string(r.spec.n)},
          {"b", format_number(r.spec.b)},
          {"x", format_number(r.spec.x)},
          {"K", std::to_string(r.K)},
          {"value", format_number(r.value)},
          {"bessel_value", format_number(r.bessel_value)},
          {"oracle", format_number(r.oracle)},
          {"abs_error", format_number(r.abs_error)},
          {"tail_bound", format_number(r.tail_bound)},
          {"terms_used", std::to_string(r.terms_used)},
          {"converged", format_bool(r.converged)}};
}

inline int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  opts.eval.tol = a.tol;
  opts.eval.max_terms = a.max_terms;
  opts.eval.mode = a.fixed ? TruncationMode::fixed_terms : TruncationMode::adaptive;
  opts.threads = a.threads;
  const auto records = sweep(build_grid(a), opts);
  std::vector<Row> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back(record_row(r));
    if (!r.error.empty()) {
      err << to_string(r.spec.family) << " n=" << r.spec.n << " b=" << format_number(r.spec.b)
          << " x=" << format_number(r.spec.x) << ": " << r.error << '\n';
    }
  }
  if (rows.empty()) {
    out << "family,n,b,x,K,value,bessel_value,oracle,abs_error,tail_bound,terms_used,converged\n";
  } else {
    write_csv(out, rows);
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::vector<std::string> suites{"identity", "fourier", "decay"};
  std::string asymptote = "published";
  int top = 5;
};

struct Finding {
  std::string label;
  double score = 0.0;
  bool pass = true;
};

inline std::string describe(SeriesFamily f, double nu, double b, double y) {
  std::ostringstream s;
  s << to_string(f) << " nu=" << format_number(nu) << " b=" << format_number(b) << " y=" << format_number(y);
  return s.str();
}

inline std::vector<Finding> identity_suite() {
  std::vector<Finding> out;
  for (auto f : {SeriesFamily::A, SeriesFamily::B, SeriesFamily::C})
    for (double nu : {0.0, 0.5, 1.0, 2.5})
      for (double b : {0.5, 1.0, 2.0})
        for (double y : {0.0, 1.0, pi, 5.0}) {
          const auto r = check_integral_identity(f, nu, b, y);
          out.push_back({describe(f, nu, b, y), r.residual, r.residual < 1e-8});
        }
  return out;
}

inline std::vector<Finding> fourier_suite() {
  std::vector<Finding> out;
  for (auto f : {SeriesFamily::A, SeriesFamily::B, SeriesFamily::C})
    for (double nu : {0.0, 1.0, 2.5})
      for (double b : {0.3, 0.7, 1.0})
        for (int k = 0; k <= 8; ++k) {
          const auto r = check_fourier_coefficient(f, nu, b, k);
          out.push_back({describe(f, nu, b, r.y) + " k=" + std::to_string(k), r.residual, r.residual < 1e-8});
        }
  return out;
}

inline std::vector<Finding> decay_suite(AsymptoteForm form) {
  std::vector<Finding> out;
  for (auto f : {SeriesFamily::A, SeriesFamily::B, SeriesFamily::C})
    for (int n = (f == SeriesFamily::B ? 1 : 0); n <= 5; ++n)
      for (double x : {1.0, 5.0}) {
        const auto d = decay_ratio_study(f, n, x, {10'000}, form).front();
        const double dev = std::abs(d.ratio - 1.0);
        std::ostringstream s;
        s << to_string(f) << " n=" << n << " x=" << format_number(x) << " ratio=" << format_number(d.ratio);
        out.push_back({s.str(), dev, d.ratio >= 0.99 && d.ratio <= 1.01});
      }
  return out;
}

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
  const AsymptoteForm form = a.asymptote == "rederived" ? AsymptoteForm::rederived : AsymptoteForm::published;
  bool all_pass = true;
  for (const auto& suite : a.suites) {
    std::vector<Finding> findings;
    std::string metric;
    if (suite == "identity") {
      findings = identity_suite();
      metric = "residual (threshold 1e-8)";
    } else if (suite == "fourier") {
      findings = fourier_suite();
      metric = "residual (threshold 1e-8)";
    } else if (suite == "decay") {
      findings = decay_suite(form);
      metric = "|ratio - 1| at k = 1e4 (threshold 0.01)";
    } else {
      throw InvalidArgument("unknown suite '" + suite + "'");
    }
    const auto failed = std::count_if(findings.begin(), findings.end(), [](const Finding& f) { return !f.pass; });
    all_pass = all_pass && failed == 0;
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& l, const Finding& r) { return l.score > r.score; });
    out << suite << ": " << findings.size() << " checks, " << failed << " failed, metric " << metric << '\n';
    const int shown = std::min<int>(a.top, static_cast<int>(findings.size()));
    for (int i = 0; i < shown; ++i) {
      out << "  " << (findings[i].pass ? "ok   " : "FAIL ") << format_number(findings[i].score) << "  "
          << findings[i].label << '\n';
    }
  }
  return all_pass ? exit_ok : exit_no_convergence;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<int> orders{0, 1, 2, 3, 4, 5};
  std::vector<double> arguments{1.0, 5.0, 10.0};
  std::vector<double> tols{1e-6, 1e-8};
  std::int64_t max_terms = 1'000'000;
};

inline int run_bench(const BenchArgs& a, std::ostream& out) {
  out << "n,x,tol,K_A,K_B,K_C,fewest\n";
  for (int n : a.orders)
    for (double x : a.arguments)
      for (double tol : a.tols) {
        std::array<std::optional<std::int64_t>, 3> ks;
        const std::array<SeriesFamily, 3> fams{SeriesFamily::A, SeriesFamily::B, SeriesFamily::C};
        for (std::size_t i = 0; i < fams.size(); ++i) {
          const SeriesSpec spec{fams[i], n, 1.0, x};
          if (!is_valid_spec(spec)) continue;
          // tol is on the J_n(x) scale; the bound is on the series-value scale.
          const double value_tol = tol / detail::recovery_factor(spec);
          try {
            ks[i] = terms_to_tolerance(spec, value_tol, a.max_terms);
          } catch (const std::exception&) {
          }
        }
        std::string fewest;
        std::int64_t best = -1;
        for (std::size_t i = 0; i < fams.size(); ++i) {
          if (ks[i] && (best < 0 || *ks[i] < best)) {
            best = *ks[i];
            fewest = std::string(to_string(fams[i]));
          }
        }
        out << n << ',' << format_number(x) << ',' << format_number(tol);
        for (const auto& k : ks) out << ',' << (k ? std::to_string(*k) : "");
        out << ',' << fewest << '\n';
      }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// trig

struct TrigArgs {
  std::vector<double> arguments{1.0, 5.0, 10.0};
  std::vector<std::int64_t> counts{100, 1000, 10000};
};

inline int run_trig(const TrigArgs& a, std::ostream& out) {
  out << "series,x,K,value,limit,abs_error,tail_bound\n";
  auto emit = [&](const char* name, double x, std::int64_t K, double value, double limit, double bound) {
    out << name << ',' << format_number(x) << ',' << K << ',' << format_number(value) << ','
        << format_number(limit) << ',' << format_number(std::abs(value - limit)) << ',' << format_number(bound)
        << '\n';
  };
  for (double x : a.arguments)
    for (std::int64_t K : a.counts) {
      emit("cos", x, K, cos_series(x, K), cos_series_limit(x), cos_series_tail_bound(x, K));
      emit("sin1", x, K, sin_series1(x, K), sin_series_limit(x), sin_series1_tail_bound(x, K));
      double bound = std::nan("");
      try {
        bound = sin_series2_tail_bound(x, K);
      } catch (const BoundNotApplicable&) {
      }
      emit("sin2", x, K, sin_series2(x, K), sin_series_limit(x), bound);
    }
  return exit_ok;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-power series for Bessel functions J_n of integer order"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 no convergence or failed check, 2 domain error, 64 usage error.");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one series");
  eval->add_option("--family", ev.family, "A, B, C, b1 (A at b = 1) or j0var (J_0 at b = sqrt(3)/2)")
      ->check(CLI::IsMember({"A", "B", "C", "b1", "j0var"}));
  eval->add_option("--n", ev.n, "Bessel order n >= 0");
  eval->add_option("--b", ev.b, "Scale b in [0, 1]");
  eval->add_option("--x", ev.x, "Series argument x; the recovered value is J_n(b x)");
  eval->add_option("--tol", ev.tol, "Adaptive tolerance on J_n(b x)");
  eval->add_option("--max-terms", ev.max_terms, "Term budget K_max");
  eval->add_flag("--fixed", ev.fixed, "Sum exactly --max-terms terms instead of stopping adaptively");
  eval->add_option("--format", ev.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  eval->add_flag("--check", ev.check, "Compare against the power-series oracle");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "CSV sweep over a (family, n, b, x) grid");
  table->add_option("--family", tb.families, "Families")->delimiter(',');
  table->add_option("--n", tb.orders, "Orders")->delimiter(',');
  table->add_option("--b", tb.scales, "Scales")->delimiter(',');
  table->add_option("--x", tb.arguments, "Arguments")->delimiter(',');
  table->add_option("--tol", tb.tol, "Adaptive tolerance on J_n(b x)");
  table->add_option("--max-terms", tb.max_terms, "Term budget K_max");
  table->add_flag("--fixed", tb.fixed, "Sum exactly --max-terms terms");
  table->add_option("--threads", tb.threads, "Worker threads; output order is unaffected");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Integral identity, Fourier coefficient and term decay checks");
  verify->add_option("--suite", vf.suites, "identity, fourier, decay")->delimiter(',');
  verify->add_option("--asymptote", vf.asymptote, "published or rederived")
      ->check(CLI::IsMember({"published", "rederived"}));
  verify->add_option("--top", vf.top, "Worst offenders listed per suite");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Terms needed per family at b = 1 to reach tol on J_n(x)");
  bench->add_option("--n", bn.orders, "Orders")->delimiter(',');
  bench->add_option("--x", bn.arguments, "Arguments")->delimiter(',');
  bench->add_option("--tol", bn.tols, "Tolerances")->delimiter(',');
  bench->add_option("--max-terms", bn.max_terms, "Term budget");

  TrigArgs tr;
  auto* trig = app.add_subcommand("trig", "Sine and cosine series against their limits");
  trig->add_option("--x", tr.arguments, "Arguments")->delimiter(',');
  trig->add_option("--K", tr.counts, "Truncation indices")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (eval->parsed()) {
      const EvalOutcome o = evaluate(ev, err);
      print_eval(out, o, ev.format);
      return o.code;
    }
    if (table->parsed()) return run_table(tb, out, err);
    if (verify->parsed()) return run_verify(vf, out);
    if (bench->parsed()) return run_bench(bn, out);
    if (trig->parsed()) return run_trig(tr, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain_error;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return exit_usage;
  } catch (const NoConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return exit_no_convergence;
  }
  return exit_usage;
}

}  // namespace bessel_series::cli
