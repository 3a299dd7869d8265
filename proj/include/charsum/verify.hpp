#pragma once

// The full identity suite run by `charsum verify-all`, step by step.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "charsum/cyclotomy.hpp"
#include "charsum/expsum.hpp"
#include "charsum/jacobsthal.hpp"
#include "charsum/walsh.hpp"

namespace charsum {

struct StepResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned threads = 1;
  u64 seed = 1;
  int scaling_samples = 200;
  int zero_set_samples = 50;
};

/// Expected multiplicities of -p^2k w^j in the spectrum of Tr_n(x^d + x^2).
inline std::vector<i64> spectrum_counts(const FieldParams& P) {
  const i64 p2k = P.p2k();
  const i64 p2k1 = ipow(P.p, 2 * P.k - 1);
  std::vector<i64> c(static_cast<std::size_t>(P.p), p2k1 * (p2k + 1));
  c[0] = (p2k1 - 1) * (p2k + 1) + 1;
  return c;
}

class Verifier {
 public:
  using Sink = std::function<void(const StepResult&)>;

  Verifier(const FieldParams& params, VerifyOptions opts)
      : params_(params), opts_(opts), ctx_(build_context(params, params.n())), es_(ctx_, params) {}
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return ctx_; }
  [[nodiscard]] const ExpSum& expsum() const noexcept { return es_; }

  /// Runs every step in order, reporting each through `sink`.
  std::vector<StepResult> run(const Sink& sink = {}) {
    std::vector<StepResult> out;
    auto step = [&](std::string name, auto&& body) {
      StepResult r;
      r.name = std::move(name);
      const auto t0 = std::chrono::steady_clock::now();
      try {
        body(r);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (sink) sink(r);
      out.push_back(std::move(r));
    };
    const auto& F = ctx_;
    const auto& jac = es_.jacobsthal();
    const i64 pk = params_.pk();
    const std::vector<Elem> bs{F.one(), F.xi()};

    step("cyclotomic numbers closed form", [&](StepResult& r) {
      Cyclotomy cyc(F, params_);
      const auto t = cyc.full_table(opts_.threads);
      const auto rep = cyc.check_closed_form(t);
      r.pass = rep.pass() && t.total() == params_.p2k() - 2;
      r.detail = "order " + std::to_string(t.order) + ", total " + std::to_string(t.total()) + ", mismatches " +
                 std::to_string(rep.mismatches.size());
    });

    step("class character sums", [&](StepResult& r) {
      Cyclotomy cyc(F, params_);
      const auto pts = cyc.pt_sums();
      r.pass = true;
      for (i64 t = 0; t < cyc.order(); ++t)
        if (pts[static_cast<std::size_t>(t)] != CycInt::integer(F.p(), cyc.pt_closed_form(t))) {
          r.pass = false;
          r.detail = "t=" + std::to_string(t) + " gives " + pts[static_cast<std::size_t>(t)].to_string();
        }
      if (r.pass) r.detail = std::to_string(cyc.order()) + " classes";
    });

    std::vector<Elem> outside;
    for (Elem a : jac.elements())
      if (!a.is_zero() && !jac.in_base(a)) outside.push_back(a);

    step("companion sum closed form", [&](StepResult& r) {
      r.pass = true;
      for (Elem a : outside)
        if (jac.companion_sum(pk + 1, a) != jac.companion_closed_form(a)) {
          r.pass = false;
          r.detail = "a=" + F.format_log(a);
        }
      if (r.pass) r.detail = std::to_string(outside.size()) + " values";
    });

    step("Jacobsthal sum bound", [&](StepResult& r) {
      const auto scan = jac.bound_scan(opts_.threads);
      r.pass = true;
      r.detail = "max ratio " + std::to_string(scan.max_ratio) + " at " + F.format_log(scan.argmax) +
                 (scan.bound_attained ? " (bound attained)" : "");
    });

    step("curve point-count identity", [&](StepResult& r) {
      r.pass = true;
      for (Elem a : outside) {
        const i64 H = jac.jacobsthal_sum(pk + 1, a);
        if (H % (pk + 1) != 0 || H / (pk + 1) != jac.curve_point_count_for(a) - pk) {
          r.pass = false;
          r.detail = "a=" + F.format_log(a);
        }
      }
      if (r.pass) r.detail = std::to_string(outside.size()) + " values";
    });

    step("brute force vs zero count", [&](StepResult& r) {
      r.pass = true;
      i64 checked = 0;
      for (Elem b : bs) {
        const auto sw = es_.oracle_sweep(b, opts_.threads);
        checked += sw.checked;
        if (!sw.pass()) {
          r.pass = false;
          r.detail = "b=" + F.format_log(b) + " a=" + F.format_log(sw.mismatches.front());
        }
      }
      if (r.pass) r.detail = std::to_string(checked) + " pairs";
    });

    std::vector<DistributionReport> dists;
    for (Elem b : bs) dists.push_back(es_.distribution_sweep(b, opts_.threads));

    step("three-valued range and zero sets", [&](StepResult& r) {
      r.pass = std::all_of(dists.begin(), dists.end(), [](const auto& d) { return d.three_valued; });
      std::mt19937_64 rng(opts_.seed);
      int sampled = 0;
      for (int tries = 0; sampled < opts_.zero_set_samples && tries < 100 * opts_.zero_set_samples; ++tries) {
        const CoeffPair c{F.element(static_cast<i64>(rng() % static_cast<u64>(F.size()))),
                          F.element(static_cast<i64>(rng() % static_cast<u64>(F.size())))};
        if (c.a.is_zero() && c.b.is_zero()) continue;
        if (es_.classify(c).tag != CaseTag::NormDiffer) continue;
        ++sampled;
        const auto chk = es_.reduced_poly_zeros(c);
        if (!chk.sets_equal() || !chk.n_in_range()) {
          r.pass = false;
          r.detail = "a=" + F.format_log(c.a) + " b=" + F.format_log(c.b);
        }
      }
      if (r.pass) r.detail = std::to_string(sampled) + " sampled F/L zero sets";
    });

    step("N by three paths", [&](StepResult& r) {
      r.pass = true;
      i64 checked = 0;
      for (Elem b : bs)
        for (Elem a : es_.qualifying_a(b)) {
          const CoeffPair c{a, b};
          const i64 n = es_.zero_count(c).n;
          ++checked;
          if (es_.count_via_nonsquares(c) != n || es_.count_via_jacobsthal(c) != n) {
            r.pass = false;
            r.detail = "a=" + F.format_log(a) + " b=" + F.format_log(b);
          }
        }
      if (r.pass) r.detail = std::to_string(checked) + " pairs";
    });

    step("scaling invariance", [&](StepResult& r) {
      r.pass = true;
      std::mt19937_64 rng(opts_.seed ^ 0x9e3779b97f4a7c15ull);
      int done = 0;
      while (done < opts_.scaling_samples) {
        const CoeffPair c{F.element(static_cast<i64>(rng() % static_cast<u64>(F.size()))),
                          F.element(static_cast<i64>(rng() % static_cast<u64>(F.size())))};
        const Elem h = F.exp(static_cast<i64>(rng() % static_cast<u64>(F.order())));
        if (c.a.is_zero() && c.b.is_zero()) continue;
        ++done;
        if (!es_.scaling_check(c, h)) {
          r.pass = false;
          r.detail = "a=" + F.format_log(c.a) + " b=" + F.format_log(c.b) + " h=" + F.format_log(h);
        }
      }
      if (r.pass) r.detail = std::to_string(done) + " triples";
    });

    step("properties of N(a,b)", [&](StepResult& r) {
      r.pass = true;
      for (Elem b : bs) {
        const auto rep = es_.property_suite(b);
        for (const auto& c : rep.checks)
          if (!c.pass) {
            r.pass = false;
            r.detail = "b=" + F.format_log(b) + " " + c.name + ": " + c.detail;
          }
        if (r.pass) r.detail += "b=" + F.format_log(b) + " N in [" + std::to_string(rep.min_n) + "," +
                                std::to_string(rep.max_n) + "] ";
      }
    });

    step("r/s/t identities", [&](StepResult& r) {
      r.pass = std::all_of(dists.begin(), dists.end(), [](const auto& d) { return d.pass(); });
      for (const auto& d : dists)
        r.detail += "b=" + F.format_log(d.b) + " (r,s,t)=(" + std::to_string(d.r) + "," + std::to_string(d.s) + "," +
                    std::to_string(d.t) + ") ";
    });

    step("spectrum of Tr(x^d + x^2)", [&](StepResult& r) {
      Walsh w(es_);
      const auto spectrum = w.full_spectrum({F.one(), F.one()}, opts_.threads);
      const auto want = spectrum_counts(params_);
      bool counts_ok = true;
      i64 total = 0;
      for (i64 j = 0; j < F.p(); ++j) {
        const auto v = CycInt::omega_power(F.p(), j).scale(-params_.p2k());
        const auto it = spectrum.summary.find(v);
        const i64 got = it == spectrum.summary.end() ? 0 : it->second;
        total += got;
        if (got != want[static_cast<std::size_t>(j)]) counts_ok = false;
      }
      bool roots_ok = true;
      for (i64 i = 0; i < F.size() && roots_ok; ++i) {
        const auto rep = w.root_characterization(F.element(i));
        if (!rep.pass()) {
          roots_ok = false;
          r.detail = "y=" + F.format_log(rep.y);
        }
      }
      r.pass = counts_ok && total == F.size() && roots_ok && spectrum.parseval_ok && w.is_bent(spectrum) &&
               w.is_weakly_regular_neg(spectrum);
      if (r.pass) r.detail = "counts, roots, Parseval, bent, weakly regular";
    });
    return out;
  }

 private:
  FieldParams params_;
  VerifyOptions opts_;
  FieldCtx ctx_;
  ExpSum es_;
};

}  // namespace charsum
