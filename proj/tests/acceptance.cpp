// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timing limits are measured single-threaded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "charsum/charsum.hpp"

using namespace charsum;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Instance {
  FieldParams P;
  FieldCtx F;
  ExpSum es;
  explicit Instance(FieldParams params) : P(params), F(build_context(P, P.n())), es(F, P) {}
  Instance(const Instance&) = delete;
};

Instance& inst(i64 p, i64 k) {
  static std::map<std::pair<i64, i64>, std::unique_ptr<Instance>> cache;
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_unique<Instance>(FieldParams::make(p, k));
  return *slot;
}

const std::pair<i64, i64> kTableSizes[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};
const std::pair<i64, i64> kSmall[] = {{3, 1}, {5, 1}};

std::string tag(i64 p, i64 k) { return "(" + std::to_string(p) + "," + std::to_string(k) + ")"; }

/// Criterion body: returns true on success and appends to `detail`.
using Check = std::function<bool(std::string& detail)>;

int failures = 0;

void criterion(int id, const char* name, const Check& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s %2d %s [%.2fs] %s\n", ok ? "PASS" : "FAIL", id, name, since(t0), detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "cyclotomic tables match closed form, < 1 s each", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kTableSizes) {
      const auto P = FieldParams::make(p, k);
      const auto t0 = Clock::now();
      const auto F = build_context(P, 2 * k);
      Cyclotomy cyc(F, P);
      const auto t = cyc.full_table(1);
      const bool match = cyc.check_closed_form(t).pass();
      const double s = since(t0);
      ok = ok && match && s < 1.0;
      d += tag(p, k) + (match ? " ok " : " MISMATCH ") + std::to_string(s).substr(0, 5) + "s; ";
    }
    return ok;
  });

  criterion(2, "class character sums P_t", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kTableSizes) {
      const auto P = FieldParams::make(p, k);
      const auto F = build_context(P, 2 * k);
      Cyclotomy cyc(F, P);
      const auto pts = cyc.pt_sums();
      for (i64 t = 0; t <= P.pk(); ++t) {
        const i64 want = t == (P.pk() + 1) / 2 ? P.pk() - 1 : -1;
        if (pts[static_cast<std::size_t>(t)] != CycInt::integer(p, want)) {
          ok = false;
          d += tag(p, k) + " t=" + std::to_string(t) + "; ";
        }
      }
    }
    return ok;
  });

  criterion(3, "companion sum I_{p^k+1} closed form, exhaustive", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kTableSizes) {
      const auto P = FieldParams::make(p, k);
      const auto F = build_context(P, 2 * k);
      Jacobsthal jac(F, P);
      i64 n = 0;
      for (Elem a : jac.elements()) {
        if (a.is_zero() || jac.in_base(a)) continue;
        ++n;
        const i64 want = -(P.pk() + 1) * (F.quadratic_character(a, jac.view()) + 1);
        if (jac.companion_sum(P.pk() + 1, a) != want) ok = false;
      }
      d += tag(p, k) + " " + std::to_string(n) + " values; ";
    }
    return ok;
  });

  criterion(4, "Jacobsthal bound and curve point-count identity", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kTableSizes) {
      const auto P = FieldParams::make(p, k);
      const auto F = build_context(P, 2 * k);
      Jacobsthal jac(F, P);
      const i64 pk = P.pk();
      double max_ratio = 0;
      for (Elem a : jac.elements()) {
        if (a.is_zero() || jac.in_base(a)) continue;
        const i64 H = jac.jacobsthal_sum(pk + 1, a);
        // |H| <= 2 p^(k/2) (p^k+1)  <=>  H^2 <= 4 p^k (p^k+1)^2
        if (static_cast<__int128>(H) * H > static_cast<__int128>(4) * pk * (pk + 1) * (pk + 1)) ok = false;
        if (H % (pk + 1) != 0 || H / (pk + 1) != jac.curve_point_count_for(a) - pk) ok = false;
        max_ratio = std::max(max_ratio, jac.bound_ratio(H));
      }
      d += tag(p, k) + " max ratio " + std::to_string(max_ratio).substr(0, 5) + "; ";
    }
    return ok;
  });

  criterion(5, "brute-force S_f(0) = p^2k (2N - 1) on full sweeps", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      const auto t0 = Clock::now();
      for (Elem b : {I.F.one(), I.F.xi()}) ok = ok && I.es.oracle_sweep(b, 1).pass();
      const double s = since(t0);
      if (p == 3 && s >= 5.0) ok = false;
      d += tag(p, k) + " " + std::to_string(s).substr(0, 5) + "s; ";
    }
    auto& I = inst(3, 2);
    const auto t0 = Clock::now();
    const auto sw = I.es.oracle_sweep(I.F.one(), 1);
    const double s = since(t0);
    ok = ok && sw.pass() && s < 600.0;
    d += "(3,2) b=1 " + std::to_string(sw.checked) + " pairs " + std::to_string(s).substr(0, 5) + "s";
    return ok;
  });

  criterion(6, "three-valued S_f(0) outside the Jacobsthal case; L and F zero sets agree", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      const i64 p2k = I.P.p2k();
      i64 pairs = 0;
      for (i64 bi = 0; bi < I.F.size(); ++bi)
        for (i64 ai = 0; ai < I.F.size(); ++ai) {
          if (ai == 0 && bi == 0) continue;
          const CoeffPair c{I.F.element(ai), I.F.element(bi)};
          if (I.es.classify(c).tag == CaseTag::Jacobsthal) continue;
          const i64 n = I.es.zero_count(c).n;
          const i64 s0 = I.es.closed_from_count(n);
          ++pairs;
          if (n > 2 || (s0 != -p2k && s0 != p2k && s0 != 3 * p2k)) ok = false;
        }
      std::mt19937_64 rng(1);
      int sampled = 0;
      while (sampled < 50) {
        const CoeffPair c{I.F.element(static_cast<i64>(rng() % static_cast<u64>(I.F.size()))),
                          I.F.element(static_cast<i64>(rng() % static_cast<u64>(I.F.size())))};
        if ((c.a.is_zero() && c.b.is_zero()) || I.es.classify(c).tag != CaseTag::NormDiffer) continue;
        ++sampled;
        const auto chk = I.es.reduced_poly_zeros(c);
        if (!chk.sets_equal() || !chk.n_in_range()) ok = false;
      }
      d += tag(p, k) + " " + std::to_string(pairs) + " pairs, 50 zero-set samples; ";
    }
    return ok;
  });

  criterion(7, "N by count = by nonsquares = by Jacobsthal sum", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      i64 pairs = 0;
      for (i64 bi = 1; bi < I.F.size(); ++bi) {
        const Elem b = I.F.element(bi);
        for (Elem a : I.es.qualifying_a(b)) {
          const CoeffPair c{a, b};
          const i64 n = I.es.zero_count(c).n;
          ++pairs;
          if (I.es.count_via_nonsquares(c) != n || I.es.count_via_jacobsthal(c) != n) ok = false;
        }
      }
      d += tag(p, k) + " " + std::to_string(pairs) + " pairs; ";
    }
    return ok;
  });

  criterion(8, "N(a,b) = N(a h^d, b h^2) on 200 seeded triples", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : {std::pair<i64, i64>{3, 1}, {5, 1}, {3, 2}}) {
      auto& I = inst(p, k);
      std::mt19937_64 rng(2024);
      int done = 0;
      while (done < 200) {
        const CoeffPair c{I.F.element(static_cast<i64>(rng() % static_cast<u64>(I.F.size()))),
                          I.F.element(static_cast<i64>(rng() % static_cast<u64>(I.F.size())))};
        const Elem h = I.F.exp(static_cast<i64>(rng() % static_cast<u64>(I.F.order())));
        if (c.a.is_zero() && c.b.is_zero()) continue;
        ++done;
        if (!I.es.scaling_check(c, h)) ok = false;
      }
      d += tag(p, k) + " 200; ";
    }
    return ok;
  });

  criterion(9, "properties of N over qualifying a", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      for (Elem b : {I.F.one(), I.F.xi()}) {
        const auto rep = I.es.property_suite(b);
        for (const auto& c : rep.checks)
          if (!c.pass) {
            ok = false;
            d += tag(p, k) + " " + c.name + " " + c.detail + "; ";
          }
        i64 sum = 0;
        for (auto n : rep.counts) sum += n;
        const i64 pk = I.P.pk();
        if (sum != (pk + 1) * (pk - rep.b_character) / 2) ok = false;
      }
    }
    auto& I = inst(3, 1);
    const Elem nu = I.es.nu();
    const CoeffPair c{I.F.mul(nu, nu), I.F.one()};
    const bool six = I.es.classify(c).tag == CaseTag::Jacobsthal && I.es.zero_count(c).n == 2;
    d += std::string("(3,1) a=nu^2 b=1 N=") + std::to_string(I.es.zero_count(c).n);
    return ok && six;
  });

  criterion(10, "r+s+t and -r+s+3t identities, sum of S_f(0)", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      for (Elem b : {I.F.one(), I.F.xi()}) {
        const auto rep = I.es.distribution_sweep(b, 1);
        const i64 pn = I.P.pn(), pk = I.P.pk();
        const int chi = rep.b_character;
        if (rep.r + rep.s + rep.t != pn - pk + chi || -rep.r + rep.s + 3 * rep.t != chi * pk || rep.sum_s0 != pn)
          ok = false;
        d += tag(p, k) + " chi=" + std::to_string(chi) + " (r,s,t)=(" + std::to_string(rep.r) + "," +
             std::to_string(rep.s) + "," + std::to_string(rep.t) + "); ";
      }
    }
    return ok;
  });

  std::vector<Spectrum> spectra;

  criterion(11, "spectrum of Tr(x^d + x^2): counts, root formula, bent, weakly regular", [&](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      Walsh w(I.es);
      const auto s = w.full_spectrum({I.F.one(), I.F.one()}, 1);
      const i64 p2k = I.P.p2k();
      // (3,1): {-9: 21, -9w: 30, -9w^2: 30}; (5,1): {-25: 105, -25w^i: 130}.
      const i64 zero_count = p == 3 ? 21 : 105, other = p == 3 ? 30 : 130;
      for (i64 j = 0; j < p; ++j) {
        const auto it = s.summary.find(CycInt::omega_power(p, j).scale(-p2k));
        const i64 got = it == s.summary.end() ? 0 : it->second;
        if (got != (j == 0 ? zero_count : other)) ok = false;
      }
      if (s.summary.size() != static_cast<std::size_t>(p)) ok = false;
      for (i64 i = 0; i < I.F.size(); ++i) {
        const auto rep = w.root_characterization(I.F.element(i));
        if (!rep.pass()) ok = false;
      }
      if (!w.is_bent(s) || !w.is_weakly_regular_neg(s)) ok = false;
      d += tag(p, k) + " " + std::to_string(s.summary.size()) + " values; ";
      spectra.push_back(s);
    }
    return ok;
  });

  criterion(12, "Parseval identity on every computed spectrum", [&](std::string& d) {
    bool ok = !spectra.empty();
    auto& I = inst(3, 1);
    Walsh w(I.es);
    for (i64 e = 0; e < I.F.order(); e += 11) spectra.push_back(w.full_spectrum({I.F.exp(e), I.F.exp(e + 3)}));
    for (const auto& s : spectra) {
      const i64 q = static_cast<i64>(s.coefficients.size());
      if (!s.parseval_ok || s.parseval_sum != q * q) ok = false;
    }
    d += std::to_string(spectra.size()) + " spectra";
    return ok;
  });

  criterion(13, "1 + 2 C(tau) = S_f(0) at a = -xi^(d tau), b = 1", [](std::string& d) {
    bool ok = true;
    for (auto [p, k] : kSmall) {
      auto& I = inst(p, k);
      const auto pair = decimated_pair(I.F, I.P);
      for (i64 tau = 0; tau < pair.u.period; ++tau) {
        const CycInt c = cross_correlation(pair.u, pair.v, tau, p);
        if (correlation_to_exp_sum(c) != I.es.exp_sum_bruteforce({correlation_coefficient(I.F, I.P, tau), I.F.one()}))
          ok = false;
      }
      d += tag(p, k) + " " + std::to_string(pair.u.period) + " shifts; ";
    }
    return ok;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
