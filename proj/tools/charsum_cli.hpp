#pragma once

// `charsum` command line. run() takes explicit streams so tests can drive it
// in-process.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid arguments,
// 3 p^4k above the guard.

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charsum/charsum.hpp"
#include "charsum/io.hpp"

namespace charsum::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kGuard = 3 };

struct RunConfig {
  std::string command;
  i64 p = 3;
  i64 k = 1;
  std::string format = "json";
  unsigned threads = 1;
  u64 seed = 1;
  double guard = 1e8;
  bool allow_large = false;
  std::string a, b;
};

/// Raised inside a subcommand when an identity fails; carries the identity name.
struct VerifyFailure {
  std::string identity;
  std::string detail;
};

namespace detail {

using io::json;

inline int exit_code_for(Errc e) {
  switch (e) {
    case Errc::GuardExceeded: return kGuard;
    case Errc::BoundViolation:
    case Errc::RootCountViolation:
    case Errc::OracleMismatch:
    case Errc::PeriodMismatch:
    case Errc::NotRationalInteger:
    case Errc::WrongCase:
    case Errc::NoSolution:
      return kVerifyFailed;
    default: return kBadArgs;
  }
}

inline void check_guard(const RunConfig& cfg) {
  const auto params = FieldParams::make(cfg.p, cfg.k);
  if (cfg.allow_large) return;
  // p^4k computed in floating point so an overflow still trips the guard.
  double pn = 1.0;
  for (i64 i = 0; i < 4 * params.k; ++i) pn *= static_cast<double>(params.p);
  if (pn > cfg.guard) {
    std::ostringstream os;
    os << "p^4k = " << std::setprecision(17) << pn << " exceeds guard " << cfg.guard << " (pass --allow-large)";
    throw Error(Errc::GuardExceeded, os.str());
  }
}

inline std::string csv_cyc(const CycInt& z) {
  std::string s;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) s += (i ? ";" : "") + std::to_string(z.coeffs()[i]);
  return s;
}

/// One command's result: a JSON body plus CSV and text renderings.
struct Output {
  json body = json::object();
  std::string csv;
  std::string text;
};

inline void emit(std::ostream& out, const RunConfig& cfg, const FieldParams& P, const FieldCtx& F, const Output& o) {
  if (cfg.format == "csv") {
    out << o.csv;
  } else if (cfg.format == "text") {
    out << o.text;
  } else {
    json doc;
    doc["header"] = io::header(cfg.command, P, F, cfg.seed);
    doc["result"] = o.body;
    out << doc.dump(2) << '\n';
  }
}

inline Output cmd_cyclotomy_table(const RunConfig& cfg, const FieldParams& P, const FieldCtx& F) {
  Cyclotomy cyc(F, P);
  const auto t = cyc.full_table(cfg.threads);
  const auto rep = cyc.check_closed_form(t);
  Output o;
  o.body["order"] = t.order;
  o.body["table"] = t.table;
  o.body["total"] = t.total();
  o.body["matches_closed_form"] = rep.pass();
  o.csv = Cyclotomy::to_csv(t);
  std::ostringstream tx;
  for (i64 i = 0; i < t.order; ++i) {
    for (i64 j = 0; j < t.order; ++j) tx << (j ? " " : "") << std::setw(4) << t.table[i][j];
    tx << '\n';
  }
  o.text = tx.str();
  if (!rep.pass()) {
    const auto& m = rep.mismatches.front();
    throw VerifyFailure{"cyclotomic numbers closed form", "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ") = " +
                                                          std::to_string(m.observed) + ", expected " +
                                                          std::to_string(m.expected)};
  }
  return o;
}

inline Output cmd_pt_sums(const RunConfig&, const FieldParams& P, const FieldCtx& F) {
  Cyclotomy cyc(F, P);
  const auto pts = cyc.pt_sums();
  Output o;
  json rows = json::array();
  std::ostringstream cs, tx;
  cs << "t,value,closed_form,match\n";
  std::optional<i64> bad;
  for (i64 t = 0; t < cyc.order(); ++t) {
    const auto& v = pts[static_cast<std::size_t>(t)];
    const i64 want = cyc.pt_closed_form(t);
    const bool ok = v == CycInt::integer(F.p(), want);
    if (!ok && !bad) bad = t;
    rows.push_back(json{{"t", t}, {"value", v.coeffs()}, {"closed_form", want}, {"match", ok}});
    cs << t << ',' << csv_cyc(v) << ',' << want << ',' << (ok ? 1 : 0) << '\n';
    tx << "P_" << t << " = " << v.to_string() << (ok ? "" : "  MISMATCH") << '\n';
  }
  o.body["sums"] = rows;
  o.csv = cs.str();
  o.text = tx.str();
  if (bad) throw VerifyFailure{"class character sums", "t=" + std::to_string(*bad)};
  return o;
}

inline Output cmd_jacobsthal_scan(const RunConfig& cfg, const FieldParams&, const FieldCtx& F, const Jacobsthal& jac) {
  const auto scan = jac.bound_scan(cfg.threads);
  Output o;
  json rows = json::array();
  std::ostringstream cs, tx;
  cs << "a,H,I,I2,curve_N,bound_ratio\n";
  for (const auto& r : scan.records) {
    rows.push_back(io::to_json(F, r));
    cs << F.format_log(r.a) << ',' << r.H << ',' << r.I << ',' << r.I2 << ','
       << (r.curve_N ? std::to_string(*r.curve_N) : "") << ',' << std::setprecision(6) << r.bound_ratio << '\n';
  }
  o.body["records"] = rows;
  o.body["max_ratio"] = scan.max_ratio;
  o.body["argmax"] = F.format_log(scan.argmax);
  o.body["bound_attained"] = scan.bound_attained;
  tx << scan.records.size() << " values, max |H|/bound = " << std::setprecision(6) << scan.max_ratio << " at "
     << F.format_log(scan.argmax) << (scan.bound_attained ? " (attained)" : "") << '\n';
  o.csv = cs.str();
  o.text = tx.str();
  return o;
}

inline Output cmd_expsum(const RunConfig& cfg, const FieldCtx& F, const ExpSum& es) {
  const CoeffPair c{F.parse(cfg.a), F.parse(cfg.b)};
  const auto rec = es.record(c);
  const CycInt brute = es.exp_sum_bruteforce(c);
  const bool ok = brute == CycInt::integer(F.p(), rec.S0);
  Output o;
  o.body = io::to_json(F, rec);
  o.body["S0_bruteforce"] = brute.coeffs();
  o.body["match"] = ok;
  o.csv = "a,b,tag,N,S0\n" + F.format_log(c.a) + ',' + F.format_log(c.b) + ',' + std::string(tag_name(rec.tag)) + ',' +
          std::to_string(rec.N) + ',' + std::to_string(rec.S0) + '\n';
  o.text = std::string(tag_name(rec.tag)) + " N=" + std::to_string(rec.N) + " S0=" + std::to_string(rec.S0) + '\n';
  if (!ok) throw VerifyFailure{"brute force vs zero count", "brute force gives " + brute.to_string()};
  return o;
}

inline Output cmd_expsum_sweep(const RunConfig& cfg, const FieldCtx& F, const ExpSum& es) {
  const auto rep = es.distribution_sweep(F.parse(cfg.b), cfg.threads);
  Output o;
  o.body = io::to_json(F, rep);
  json rows = json::array();
  std::ostringstream cs;
  cs << "a,b,tag,N,S0\n";
  for (const auto& r : rep.records) {
    rows.push_back(io::to_json(F, r));
    cs << F.format_log(r.pair.a) << ',' << F.format_log(r.pair.b) << ',' << tag_name(r.tag) << ',' << r.N << ','
       << r.S0 << '\n';
  }
  o.body["records"] = rows;
  o.csv = cs.str();
  std::ostringstream tx;
  tx << "(r,s,t) = (" << rep.r << "," << rep.s << "," << rep.t << "), sum S0 = " << rep.sum_s0 << '\n';
  for (auto [n, c] : rep.jac_histogram) tx << "JACOBSTHAL N=" << n << ": " << c << '\n';
  o.text = tx.str();
  if (!rep.pass()) throw VerifyFailure{"r/s/t identities", "residuals nonzero"};
  return o;
}

inline Output cmd_walsh(const RunConfig& cfg, const FieldCtx& F, const ExpSum& es) {
  const CoeffPair c{F.parse(cfg.a), F.parse(cfg.b)};
  if (c.a.is_zero() && c.b.is_zero()) throw Error(Errc::BothCoefficientsZero, "(a, b) = (0, 0)");
  Walsh w(es);
  const auto spectrum = w.full_spectrum(c, cfg.threads);
  Output o;
  o.body = io::summary_json(spectrum);
  o.body["bent"] = w.is_bent(spectrum);
  json rows = json::array();
  std::ostringstream cs;
  cs << "y,coeff,norm2\n";
  for (i64 i = 0; i < F.size(); ++i) {
    const auto& z = spectrum.coefficients[static_cast<std::size_t>(i)];
    rows.push_back(io::to_json(F, F.element(i), z));
    cs << F.format_log(F.element(i)) << ',' << csv_cyc(z) << ',' << z.norm_squared_integer() << '\n';
  }
  o.body["coefficients"] = rows;
  o.csv = cs.str();
  std::ostringstream tx;
  for (const auto& [v, n] : spectrum.summary) tx << v.to_string() << " x " << n << '\n';
  tx << "Parseval " << (spectrum.parseval_ok ? "ok" : "FAILED") << '\n';
  o.text = tx.str();
  if (!spectrum.parseval_ok) throw VerifyFailure{"Parseval", "sum |S|^2 = " + std::to_string(spectrum.parseval_sum)};
  return o;
}

inline Output cmd_theorem1(const RunConfig& cfg, const FieldParams& P, const FieldCtx& F, const ExpSum& es) {
  Walsh w(es);
  const auto spectrum = w.full_spectrum({F.one(), F.one()}, cfg.threads);
  const auto want = spectrum_counts(P);
  Output o;
  json counts = json::array();
  std::optional<VerifyFailure> fail;
  for (i64 j = 0; j < F.p(); ++j) {
    const auto v = CycInt::omega_power(F.p(), j).scale(-P.p2k());
    const auto it = spectrum.summary.find(v);
    const i64 got = it == spectrum.summary.end() ? 0 : it->second;
    counts.push_back(json{{"j", j}, {"count", got}, {"expected", want[static_cast<std::size_t>(j)]}});
    if (got != want[static_cast<std::size_t>(j)] && !fail)
      fail = VerifyFailure{"spectrum value counts", "j=" + std::to_string(j)};
  }
  json rows = json::array();
  std::ostringstream cs;
  cs << "y,x0,predicted,actual,match\n";
  for (i64 i = 0; i < F.size(); ++i) {
    const auto rep = w.root_characterization(F.element(i));
    rows.push_back(json{{"y", F.format_log(rep.y)},
                    {"x0", F.format_log(rep.x0)},
                    {"predicted", rep.predicted.coeffs()},
                    {"match", rep.pass()}});
    cs << F.format_log(rep.y) << ',' << F.format_log(rep.x0) << ',' << csv_cyc(rep.predicted) << ','
       << csv_cyc(rep.actual) << ',' << (rep.pass() ? 1 : 0) << '\n';
    if (!rep.pass() && !fail) fail = VerifyFailure{"spectrum root formula", "y=" + F.format_log(rep.y)};
  }
  const bool bent = w.is_bent(spectrum), weak = w.is_weakly_regular_neg(spectrum);
  if (!spectrum.parseval_ok && !fail) fail = VerifyFailure{"Parseval", ""};
  if (!(bent && weak) && !fail) fail = VerifyFailure{"bent / weakly regular", ""};
  o.body["counts"] = counts;
  o.body["parseval_ok"] = spectrum.parseval_ok;
  o.body["bent"] = bent;
  o.body["weakly_regular_neg"] = weak;
  o.body["roots"] = rows;
  o.csv = cs.str();
  std::ostringstream tx;
  for (const auto& c : counts) tx << "-p^2k w^" << c["j"] << ": " << c["count"] << " (expected " << c["expected"] << ")\n";
  tx << "roots " << (fail ? "checked" : "ok") << ", bent " << bent << ", weakly regular " << weak << '\n';
  o.text = tx.str();
  if (fail) throw *fail;
  return o;
}

inline Output cmd_sequences(const RunConfig&, const FieldParams& P, const FieldCtx& F, const ExpSum& es) {
  const auto pair = decimated_pair(F, P);
  Output o;
  json rows = json::array();
  std::ostringstream cs;
  cs << "tau,C,1+2C,S0\n";
  std::optional<i64> bad;
  for (i64 tau = 0; tau < pair.u.period; ++tau) {
    const CycInt c = cross_correlation(pair.u, pair.v, tau, F.p());
    const CycInt lhs = correlation_to_exp_sum(c);
    const CycInt s0 = es.exp_sum_bruteforce({correlation_coefficient(F, P, tau), F.one()});
    if (lhs != s0 && !bad) bad = tau;
    rows.push_back(json{{"tau", tau}, {"C", c.coeffs()}, {"S0", s0.coeffs()}, {"match", lhs == s0}});
    cs << tau << ',' << csv_cyc(c) << ',' << csv_cyc(lhs) << ',' << csv_cyc(s0) << '\n';
  }
  o.body["period"] = pair.u.period;
  o.body["decimations"] = {P.d(), 2};
  o.body["rows"] = rows;
  o.csv = cs.str();
  o.text = "period " + std::to_string(pair.u.period) + ", relation " + (bad ? "FAILED" : "holds") + " for every tau\n";
  if (bad) throw VerifyFailure{"sequence correlation relation", "tau=" + std::to_string(*bad)};
  return o;
}

inline int cmd_verify_all(const RunConfig& cfg, const FieldParams& P, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.threads = cfg.threads;
  vo.seed = cfg.seed;
  Verifier v(P, vo);
  json steps = json::array();
  std::optional<std::string> first_fail;
  const auto results = v.run([&](const StepResult& r) {
    if (cfg.format == "text") out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n' << std::flush;
  });
  std::ostringstream cs;
  cs << "step,name,pass,detail\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.pass && !first_fail) first_fail = r.name;
    steps.push_back(json{{"step", i + 1}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    cs << i + 1 << ",\"" << r.name << "\"," << (r.pass ? 1 : 0) << ",\"" << r.detail << "\"\n";
  }
  if (cfg.format == "json") {
    json doc;
    doc["header"] = io::header(cfg.command, P, v.ctx(), cfg.seed);
    doc["result"] = {{"steps", steps}, {"pass", !first_fail}};
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << cs.str();
  }
  if (first_fail) {
    err << "verification failed: " << *first_fail << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_guard(cfg);
  const auto P = FieldParams::make(cfg.p, cfg.k);
  const auto& c = cfg.command;
  if (c == "verify-all") return cmd_verify_all(cfg, P, out, err);
  try {
    if (c == "cyclotomy-table" || c == "pt-sums" || c == "jacobsthal-scan") {
      const auto F = build_context(P, 2 * P.k);
      Output o;
      if (c == "cyclotomy-table") o = cmd_cyclotomy_table(cfg, P, F);
      else if (c == "pt-sums") o = cmd_pt_sums(cfg, P, F);
      else o = cmd_jacobsthal_scan(cfg, P, F, Jacobsthal(F, P));
      emit(out, cfg, P, F, o);
      return kOk;
    }
    const auto F = build_context(P, P.n());
    const ExpSum es(F, P);
    Output o;
    if (c == "expsum") o = cmd_expsum(cfg, F, es);
    else if (c == "expsum-sweep") o = cmd_expsum_sweep(cfg, F, es);
    else if (c == "walsh-spectrum") o = cmd_walsh(cfg, F, es);
    else if (c == "theorem1-verify") o = cmd_theorem1(cfg, P, F, es);
    else o = cmd_sequences(cfg, P, F, es);
    emit(out, cfg, P, F, o);
    return kOk;
  } catch (const VerifyFailure& f) {
    err << "verification failed: " << f.identity << (f.detail.empty() ? "" : " (" + f.detail + ")") << '\n';
    return kVerifyFailed;
  }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact character sums, cyclotomy and Walsh spectra over GF(p^4k)", "charsum"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = threads_from_env();

  struct Command {
    const char* name;
    const char* help;
    bool needs_a;
    bool needs_b;
  };
  const std::vector<Command> commands{
      {"cyclotomy-table", "cyclotomic numbers of order p^k+1 in GF(p^2k)", false, false},
      {"pt-sums", "additive character sums over each cyclotomic class", false, false},
      {"jacobsthal-scan", "H, I and curve counts for every a in GF(p^2k)", false, false},
      {"expsum", "S_f(0) and N for one pair (a, b)", true, true},
      {"expsum-sweep", "S_f(0) for every a with fixed b", false, true},
      {"walsh-spectrum", "full Walsh spectrum of Tr(a x^d + b x^2)", true, true},
      {"theorem1-verify", "spectrum and root formula for a = b = 1", false, false},
      {"sequences-crosscorr", "decimated m-sequence correlation against S_f(0)", false, false},
      {"verify-all", "run every identity check in order", false, false},
  };
  for (const auto& s : commands) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--p", cfg.p, "odd prime")->default_val(3);
    sub->add_option("--k", cfg.k, "k >= 1")->default_val(1);
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("json");
    sub->add_option("--threads", cfg.threads, "worker threads (default CHARSUM_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->default_val(1);
    sub->add_option("--guard", cfg.guard, "largest p^4k accepted")->default_val(1e8);
    sub->add_flag("--allow-large", cfg.allow_large, "ignore the guard");
    if (s.needs_a) sub->add_option("--a", cfg.a, "element, c0,c1,... or g^e")->required();
    if (s.needs_b) sub->add_option("--b", cfg.b, "element, c0,c1,... or g^e")->required();
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadArgs;
  }
  try {
    return detail::dispatch(cfg, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return detail::exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kBadArgs;
  }
}

}  // namespace charsum::cli
