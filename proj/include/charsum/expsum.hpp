#pragma once

// Exponential sum S_f(0) of f(x) = Tr_n(a x^d + b x^2) over GF(p^4k) and the
// zero count of the linearized polynomial
//   L(X) = b^(p^2k) X + a X^(p^k) + b X^(p^2k) + a^(p^2k) X^(p^3k)
// on the subgroup U of order p^2k + 1, which determines it:
//   S_f(0) = p^2k (2N - 1),  2N = #{u in U : L(u) = 0}.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charsum/cycint.hpp"
#include "charsum/field.hpp"
#include "charsum/jacobsthal.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

struct CoeffPair {
  Elem a;
  Elem b;
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

enum class CaseTag {
  NormDiffer,   // a^(p^k(p^k+1)) != b^(p^k+1)
  SquareMatch,  // norms equal, a^2 = b^d, b != 0
  Jacobsthal,   // norms equal, a^2 != b^d
};

constexpr std::string_view tag_name(CaseTag t) noexcept {
  switch (t) {
    case CaseTag::NormDiffer: return "NORM_DIFFER";
    case CaseTag::SquareMatch: return "SQUARE_MATCH";
    case CaseTag::Jacobsthal: return "JACOBSTHAL";
  }
  return "?";
}

struct Classification {
  CaseTag tag = CaseTag::NormDiffer;
  bool norms_equal = false;
  bool square_match = false;  // a^2 = b^d with b != 0
  int b_character = 0;        // b^((p^n-1)/2) as +1/-1, 0 for b = 0
};

struct ZeroCount {
  i64 n = 0;                   // half the number of zeros of L in U
  std::vector<Elem> witnesses; // the zeros, sorted by discrete log
};

struct ExpSumRecord {
  CoeffPair pair;
  CaseTag tag = CaseTag::NormDiffer;
  i64 N = 0;
  i64 S0 = 0;
  std::vector<Elem> witnesses;
};

struct ZeroSetCheck {
  std::vector<Elem> l_zeros;  // zeros of L in GF(p^n)
  std::vector<Elem> f_zeros;  // zeros of F in GF(p^n)
  i64 n = 0;
  [[nodiscard]] bool sets_equal() const { return l_zeros == f_zeros; }
  [[nodiscard]] bool n_in_range() const { return n >= 0 && n <= 2; }
};

struct NamedCheck {
  explicit NamedCheck(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

struct PropertyReport {
  Elem b;
  int b_character = 0;
  std::vector<Elem> qualifying;  // a with equal norms and a^2 != b^d
  std::vector<i64> counts;       // N(a, b) for each qualifying a
  i64 min_n = 0;
  i64 max_n = 0;
  std::vector<NamedCheck> checks;

  [[nodiscard]] bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
  }
};

struct DistributionReport {
  Elem b;
  int b_character = 0;
  i64 r = 0, s = 0, t = 0;
  std::map<i64, i64> jac_histogram;  // N -> count over JACOBSTHAL pairs
  i64 sum_s0 = 0;
  i64 count_residual = 0;     // (r+s+t) - (p^n - p^k + chi(b))
  i64 weighted_residual = 0;  // (-r+s+3t) - chi(b) p^k
  i64 sum_residual = 0;       // sum_a S_f(0) - p^n
  bool three_valued = true;   // NORM_DIFFER/SQUARE_MATCH pairs only hit N in {0,1,2}
  bool jacobsthal_positive = true;  // no JACOBSTHAL pair with N = 0
  std::vector<ExpSumRecord> records;

  [[nodiscard]] bool pass() const {
    return count_residual == 0 && weighted_residual == 0 && sum_residual == 0 && three_valued &&
           jacobsthal_positive;
  }
};

struct OracleSweep {
  i64 checked = 0;
  std::vector<Elem> mismatches;  // values of a where brute force and closed form differ
  [[nodiscard]] bool pass() const { return mismatches.empty(); }
};

class ExpSum {
 public:
  /// `ctx` must be the degree-4k context for `params`.
  ExpSum(const FieldCtx& ctx, const FieldParams& params)
      : ctx_(&ctx), params_(params), jac_(ctx, params) {
    if (ctx.m() != params.n() || ctx.p() != params.p)
      throw Error(Errc::DegreeUnsupported, "expsum needs the GF(p^4k) context");
    pk_ = params.pk();
    p2k_ = params.p2k();
    p3k_ = params.p3k();
    d_ = params.d();
    gf2k_ = ctx.subfield(static_cast<int>(2 * params.k));
    const Elem gen = ctx.exp(p2k_ - 1);
    Elem u = ctx.one();
    for (i64 i = 0; i <= p2k_; ++i) {
      u_.push_back(u);
      u = ctx.mul(u, gen);
    }
    std::sort(u_.begin(), u_.end(), [&](Elem x, Elem y) { return ctx.discrete_log(x) < ctx.discrete_log(y); });
  }

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return *ctx_; }
  [[nodiscard]] const FieldParams& params() const noexcept { return params_; }
  [[nodiscard]] const Jacobsthal& jacobsthal() const noexcept { return jac_; }
  [[nodiscard]] const SubfieldView& gf2k() const noexcept { return gf2k_; }
  [[nodiscard]] Elem nu() const noexcept { return gf2k_.generator; }

  /// The cyclic subgroup of order p^2k + 1, sorted by discrete log.
  [[nodiscard]] const std::vector<Elem>& subgroup_U() const noexcept { return u_; }

  [[nodiscard]] Elem linearized_eval(Elem x, CoeffPair c) const {
    const auto& F = *ctx_;
    const Elem t0 = F.mul(F.frobenius(c.b, 2 * params_.k), x);
    const Elem t1 = F.mul(c.a, F.frobenius(x, params_.k));
    const Elem t2 = F.mul(c.b, F.frobenius(x, 2 * params_.k));
    const Elem t3 = F.mul(F.frobenius(c.a, 2 * params_.k), F.frobenius(x, 3 * params_.k));
    return F.add(F.add(t0, t1), F.add(t2, t3));
  }

  [[nodiscard]] ZeroCount zero_count(CoeffPair c) const {
    require_admissible(c);
    ZeroCount z;
    for (Elem u : u_)
      if (linearized_eval(u, c).is_zero()) z.witnesses.push_back(u);
    if (z.witnesses.size() % 2 != 0) throw Error(Errc::OracleMismatch, "odd zero count of L on U");
    z.n = static_cast<i64>(z.witnesses.size() / 2);
    return z;
  }

  [[nodiscard]] i64 closed_from_count(i64 n) const { return checked_mul(p2k_, 2 * n - 1); }

  [[nodiscard]] i64 exp_sum_closed(CoeffPair c) const { return closed_from_count(zero_count(c).n); }

  /// f(x) = Tr_n(a x^d + b x^2) as an integer in 0..p-1.
  [[nodiscard]] i64 f_value(CoeffPair c, Elem x) const {
    const auto& F = *ctx_;
    return mod(F.abs_trace(F.mul(c.a, F.pow(x, d_))) + F.abs_trace(F.mul(c.b, F.mul(x, x))), F.p());
  }

  /// Sum over x in GF(p^n) of w^f(x), exactly.
  [[nodiscard]] CycInt exp_sum_bruteforce(CoeffPair c) const {
    require_admissible(c);
    const auto& F = *ctx_;
    OmegaCounter acc(F.p());
    acc.add(0);  // x = 0
    if (F.has_tables()) {
      const i64 ord = F.order();
      const i64 dd = mod(d_, ord);
      const bool has_a = !c.a.is_zero(), has_b = !c.b.is_zero();
      i64 ea = has_a ? F.discrete_log(c.a) : 0;
      i64 eb = has_b ? F.discrete_log(c.b) : 0;
      for (i64 e = 0; e < ord; ++e) {
        i64 v = 0;
        if (has_a) v += F.trace_of_power(ea);
        if (has_b) v += F.trace_of_power(eb);
        acc.add(v);
        ea += dd;
        if (ea >= ord) ea -= ord;
        eb += 2;
        if (eb >= ord) eb -= ord;
      }
    } else {
      for (i64 i = 1; i < F.size(); ++i) acc.add(f_value(c, F.element(i)));
    }
    return acc.value();
  }

  [[nodiscard]] int character_of(Elem b) const {
    if (b.is_zero()) return 0;
    return ctx_->pow(b, ctx_->order() / 2) == ctx_->one() ? 1 : -1;
  }

  [[nodiscard]] Classification classify(CoeffPair c) const {
    require_admissible(c);
    const auto& F = *ctx_;
    Classification out;
    out.norms_equal = F.pow(c.a, checked_mul(pk_, pk_ + 1)) == F.pow(c.b, pk_ + 1);
    out.square_match = !c.b.is_zero() && F.mul(c.a, c.a) == F.pow(c.b, d_);
    out.b_character = character_of(c.b);
    if (!out.norms_equal) out.tag = CaseTag::NormDiffer;
    else if (out.square_match) out.tag = CaseTag::SquareMatch;
    else out.tag = CaseTag::Jacobsthal;
    return out;
  }

  /// a^(p^2k) b^(p^3k) - a b^(p^k); vanishes exactly when the norms agree.
  [[nodiscard]] Elem middle_coefficient(CoeffPair c) const {
    const auto& F = *ctx_;
    const auto k = params_.k;
    return F.sub(F.mul(F.frobenius(c.a, 2 * k), F.frobenius(c.b, 3 * k)), F.mul(c.a, F.frobenius(c.b, k)));
  }

  /// Zero sets of L and of
  ///   F(X) = A X^(p^2k) + B X^(p^k) + A^(p^k) X,  A = a^(p^k(p^k+1)) - b^(p^k+1),
  /// over all of GF(p^n), for pairs whose norms differ.
  [[nodiscard]] ZeroSetCheck reduced_poly_zeros(CoeffPair c) const {
    const auto& F = *ctx_;
    const auto k = params_.k;
    if (classify(c).norms_equal) throw Error(Errc::WrongCase, "norms agree");
    const Elem A = F.sub(F.pow(c.a, checked_mul(pk_, pk_ + 1)), F.pow(c.b, pk_ + 1));
    const Elem B = middle_coefficient(c);
    const Elem Ak = F.frobenius(A, k);
    ZeroSetCheck out;
    for (i64 i = 0; i < F.size(); ++i) {
      const Elem x = F.element(i);
      if (linearized_eval(x, c).is_zero()) out.l_zeros.push_back(x);
      const Elem fx = F.add(F.add(F.mul(A, F.frobenius(x, 2 * k)), F.mul(B, F.frobenius(x, k))), F.mul(Ak, x));
      if (fx.is_zero()) out.f_zeros.push_back(x);
    }
    out.n = zero_count(c).n;
    return out;
  }

  /// g in GF(p^2k)* with g^(p^k-1) = -b^(p^3k)/a, the smallest power of nu.
  [[nodiscard]] Elem find_g(CoeffPair c) const {
    if (classify(c).tag != CaseTag::Jacobsthal) throw Error(Errc::WrongCase, "find_g needs a JACOBSTHAL pair");
    const auto& F = *ctx_;
    const Elem target = F.neg(F.div(F.frobenius(c.b, 3 * params_.k), c.a));
    if (!F.contains(gf2k_, target) || F.pow(target, pk_ + 1) != F.one())
      throw Error(Errc::NoSolution, "target outside the order p^k+1 subgroup");
    const i64 lg = F.discrete_log(target, gf2k_);
    if (lg % (pk_ - 1) != 0) throw Error(Errc::NoSolution, "target not a (p^k-1)-th power");
    const Elem g = F.pow(nu(), lg / (pk_ - 1));
    if (F.pow(g, pk_ - 1) != target) throw Error(Errc::NoSolution, "g check failed");
    return g;
  }

  /// b^(p^2k+1), an element of GF(p^2k).
  [[nodiscard]] Elem b_norm(Elem b) const { return ctx_->pow(b, p2k_ + 1); }

  /// #{c in GF(p^k) : (c g)^2 - b^(p^2k+1) is a nonsquare in GF(p^2k)}.
  [[nodiscard]] i64 count_via_nonsquares(CoeffPair c, Elem g) const {
    const auto& F = *ctx_;
    const Elem bn = b_norm(c.b);
    i64 n = 0;
    for (Elem cc : jac_.base_elements()) {
      const Elem cg = F.mul(cc, g);
      const Elem D = F.sub(F.mul(cg, cg), bn);
      if (D.is_zero()) throw Error(Errc::OracleMismatch, "discriminant vanished");
      if (F.quadratic_character(D, gf2k_) == -1) ++n;
    }
    return n;
  }

  [[nodiscard]] i64 count_via_nonsquares(CoeffPair c) const { return count_via_nonsquares(c, find_g(c)); }

  /// The Jacobsthal argument -b^(p^2k+1)/g^2.
  [[nodiscard]] Elem jacobsthal_argument(CoeffPair c, Elem g) const {
    const auto& F = *ctx_;
    return F.neg(F.div(b_norm(c.b), F.mul(g, g)));
  }

  /// N from 2N = p^k - H_{p^k+1}(-b^(p^2k+1)/g^2)/(p^k+1) + 1.
  [[nodiscard]] i64 count_via_jacobsthal(CoeffPair c) const {
    const Elem h = jacobsthal_argument(c, find_g(c));
    const i64 H = jac_.jacobsthal_sum(pk_ + 1, h);
    if (H % (pk_ + 1) != 0) throw Error(Errc::OracleMismatch, "H not divisible by p^k+1");
    const i64 twice = pk_ - H / (pk_ + 1) + 1;
    if (twice % 2 != 0) throw Error(Errc::OracleMismatch, "odd 2N from Jacobsthal sum");
    return twice / 2;
  }

  /// S_f(0) expressed through the Jacobsthal sum: p^2k (p^k - H/(p^k+1)).
  [[nodiscard]] i64 exp_sum_via_jacobsthal(CoeffPair c) const {
    const Elem h = jacobsthal_argument(c, find_g(c));
    const i64 H = jac_.jacobsthal_sum(pk_ + 1, h);
    return checked_mul(p2k_, pk_ - H / (pk_ + 1));
  }

  /// N(a, b) == N(a h^d, b h^2).
  [[nodiscard]] bool scaling_check(CoeffPair c, Elem h) const {
    if (h.is_zero()) throw Error(Errc::ZeroArgument, "h");
    const auto& F = *ctx_;
    const CoeffPair t{F.mul(c.a, F.pow(h, d_)), F.mul(c.b, F.mul(h, h))};
    return zero_count(c).n == zero_count(t).n;
  }

  /// All a with a^(p^k(p^k+1)) = b^(p^k+1) and a^2 != b^d, by exhaustive scan.
  [[nodiscard]] std::vector<Elem> qualifying_a(Elem b) const {
    if (b.is_zero()) throw Error(Errc::ZeroB, "b");
    std::vector<Elem> out;
    const auto& F = *ctx_;
    for (i64 i = 1; i < F.size(); ++i) {
      const Elem a = F.element(i);
      if (classify({a, b}).tag == CaseTag::Jacobsthal) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [&](Elem x, Elem y) { return F.discrete_log(x) < F.discrete_log(y); });
    return out;
  }

  /// Structural properties of N(a, b) over every qualifying a for this b.
  [[nodiscard]] PropertyReport property_suite(Elem b) const {
    const auto& F = *ctx_;
    PropertyReport rep;
    rep.b = b;
    rep.b_character = character_of(b);
    rep.qualifying = qualifying_a(b);
    const bool square = rep.b_character == 1;
    const Elem binv = F.inv(b);
    auto N = [&](Elem a, Elem bb) { return zero_count({a, bb}).n; };

    NamedCheck inv{"inverse pair"}, pm{"sign flips sum to p^k+1"}, comb{"combined form"},
        par{"parity"}, bnd{"|N-(p^k+1)/2| <= p^(k/2)"};
    auto fail = [&](NamedCheck& chk, Elem a, const std::string& why) {
      if (chk.pass) chk.detail = "a=" + F.format_log(a) + ": " + why;
      chk.pass = false;
    };
    i64 sum = 0;
    rep.min_n = pk_ + 2;
    for (Elem a : rep.qualifying) {
      const i64 n = N(a, b);
      rep.counts.push_back(n);
      sum += n;
      rep.min_n = std::min(rep.min_n, n);
      rep.max_n = std::max(rep.max_n, n);
      const i64 ninv = N(F.inv(a), binv);
      const i64 nma = N(F.neg(a), b);
      const i64 nmb = N(a, F.neg(b));
      if (n != (square ? ninv : pk_ + 1 - ninv)) fail(inv, a, "N(a,b)=" + std::to_string(n));
      if (n + nma != pk_ + 1 || n + nmb != pk_ + 1) fail(pm, a, "N(a,b)+N(-a,b)=" + std::to_string(n + nma));
      if (nma != (square ? pk_ + 1 - ninv : ninv)) fail(comb, a, "N(-a,b)=" + std::to_string(nma));
      if ((n % 2 == 0) != square) fail(par, a, "N=" + std::to_string(n));
      const i64 dev = 2 * n - pk_ - 1;
      if (dev * dev > 4 * pk_) fail(bnd, a, "N=" + std::to_string(n));
    }
    rep.checks = {inv, pm, comb, par, bnd};

    NamedCheck six{"N = (p^k+1)/2 at a = +-nu^((p^2k-1)/4) b^(d/2)"};
    if (params_.p % 4 == 3 && params_.k % 2 == 1 && square) {
      const Elem base = F.mul(F.pow(nu(), (p2k_ - 1) / 4), F.pow(b, d_ / 2));
      for (Elem a : {base, F.neg(base)}) {
        if (classify({a, b}).tag != CaseTag::Jacobsthal) fail(six, a, "not a JACOBSTHAL pair");
        else if (N(a, b) * 2 != pk_ + 1) fail(six, a, "N=" + std::to_string(N(a, b)));
      }
    } else {
      six.applicable = false;
    }
    rep.checks.push_back(six);

    NamedCheck seven{"sum of N over qualifying a"};
    const i64 want = (pk_ + 1) * (pk_ - rep.b_character) / 2;
    const i64 want_count = square ? pk_ - 1 : pk_ + 1;
    if (sum != want || static_cast<i64>(rep.qualifying.size()) != want_count) {
      seven.pass = false;
      seven.detail = "sum=" + std::to_string(sum) + " want " + std::to_string(want) +
                     ", qualifying=" + std::to_string(rep.qualifying.size());
    } else {
      seven.detail = "sum=" + std::to_string(sum);
    }
    rep.checks.push_back(seven);
    return rep;
  }

  [[nodiscard]] ExpSumRecord record(CoeffPair c) const {
    ExpSumRecord r;
    r.pair = c;
    r.tag = classify(c).tag;
    auto z = zero_count(c);
    r.N = z.n;
    r.S0 = closed_from_count(z.n);
    r.witnesses = std::move(z.witnesses);
    return r;
  }

  /// Tallies S_f(0) over every a for fixed b and checks the linear identities.
  [[nodiscard]] DistributionReport distribution_sweep(Elem b, unsigned threads = 1) const {
    if (b.is_zero()) throw Error(Errc::ZeroB, "distribution sweep needs b != 0");
    const auto& F = *ctx_;
    DistributionReport rep;
    rep.b = b;
    rep.b_character = character_of(b);
    rep.records.resize(static_cast<std::size_t>(F.size()));
    parallel_for(rep.records.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) rep.records[i] = record({F.element(static_cast<i64>(i)), b});
    });
    for (const auto& r : rep.records) {
      rep.sum_s0 = checked_add(rep.sum_s0, r.S0);
      if (r.tag == CaseTag::Jacobsthal) {
        ++rep.jac_histogram[r.N];
        if (r.N == 0) rep.jacobsthal_positive = false;
      } else if (r.N == 0) {
        ++rep.r;
      } else if (r.N == 1) {
        ++rep.s;
      } else if (r.N == 2) {
        ++rep.t;
      } else {
        rep.three_valued = false;
      }
    }
    const i64 pn = F.size();
    rep.count_residual = rep.r + rep.s + rep.t - (pn - pk_ + rep.b_character);
    rep.weighted_residual = -rep.r + rep.s + 3 * rep.t - rep.b_character * pk_;
    rep.sum_residual = rep.sum_s0 - pn;
    return rep;
  }

  /// Brute-force S_f(0) against p^2k (2N - 1) for every a with this b.
  [[nodiscard]] OracleSweep oracle_sweep(Elem b, unsigned threads = 1) const {
    const auto& F = *ctx_;
    const auto count = static_cast<std::size_t>(F.size());
    std::vector<char> ok(count, 1);
    parallel_for(count, threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const CoeffPair c{F.element(static_cast<i64>(i)), b};
        if (c.a.is_zero() && c.b.is_zero()) continue;
        const CycInt brute = exp_sum_bruteforce(c);
        ok[i] = brute.is_rational_integer() && brute.coeffs()[0] == exp_sum_closed(c);
      }
    });
    OracleSweep out;
    for (std::size_t i = 0; i < count; ++i) {
      if (b.is_zero() && i == 0) continue;
      ++out.checked;
      if (!ok[i]) out.mismatches.push_back(F.element(static_cast<i64>(i)));
    }
    return out;
  }

 private:
  void require_admissible(CoeffPair c) const {
    if (c.a.is_zero() && c.b.is_zero()) throw Error(Errc::BothCoefficientsZero, "(a, b) = (0, 0)");
  }

  const FieldCtx* ctx_;
  FieldParams params_;
  Jacobsthal jac_;
  i64 pk_ = 0, p2k_ = 0, p3k_ = 0, d_ = 0;
  SubfieldView gf2k_;
  std::vector<Elem> u_;
};

}  // namespace charsum
