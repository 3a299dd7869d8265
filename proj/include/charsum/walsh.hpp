#pragma once

// Exact Walsh spectra S_f(y) = sum_x w^(f(x) - Tr_n(y x)) in Z[w].

#include <map>
#include <optional>
#include <vector>

#include "charsum/cycint.hpp"
#include "charsum/expsum.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

struct Spectrum {
  std::vector<CycInt> coefficients;  // indexed by the element index of y
  std::map<CycInt, i64> summary;     // distinct value -> multiplicity
  i64 parseval_sum = 0;              // sum of |S_f(y)|^2
  bool parseval_ok = false;          // parseval_sum == p^(2n)
};

/// Root x0 of the characterizing polynomial and the coefficient it predicts.
struct RootReport {
  Elem y;
  i64 root_count = 0;
  Elem x0;
  CycInt predicted;  // -p^2k w^(Tr_k(x0) / 4)
  CycInt actual;
  std::optional<bool> special_case_ok;  // x0 == -Tr_k^2k(y^2) when y^2 in GF(p^2k)

  [[nodiscard]] bool pass() const { return root_count == 1 && predicted == actual && special_case_ok.value_or(true); }
};

class Walsh {
 public:
  explicit Walsh(const ExpSum& es) : es_(&es), ctx_(&es.ctx()) {}

  /// f(x) for every x, indexed by discrete log (slot `order` holds x = 0).
  [[nodiscard]] std::vector<std::uint8_t> values_by_log(CoeffPair c) const {
    const auto& F = *ctx_;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(F.order()) + 1, 0);
    for (i64 e = 0; e < F.order(); ++e) out[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(es_->f_value(c, F.exp(e)));
    return out;
  }

  [[nodiscard]] CycInt walsh_coeff(CoeffPair c, Elem y) const { return coeff_from_values(values_by_log(c), y); }

  [[nodiscard]] Spectrum full_spectrum(CoeffPair c, unsigned threads = 1) const {
    const auto& F = *ctx_;
    const auto vals = values_by_log(c);
    Spectrum s;
    s.coefficients.resize(static_cast<std::size_t>(F.size()));
    parallel_for(s.coefficients.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) s.coefficients[i] = coeff_from_values(vals, F.element(static_cast<i64>(i)));
    });
    for (const auto& z : s.coefficients) {
      ++s.summary[z];
      s.parseval_sum = checked_add(s.parseval_sum, z.norm_squared_integer());
    }
    s.parseval_ok = s.parseval_sum == checked_mul(F.size(), F.size());
    return s;
  }

  /// (1/p^n) sum_y S_f(y) w^Tr(y x); equals w^f(x) for a correct spectrum.
  [[nodiscard]] CycInt inverse_at(const Spectrum& s, Elem x) const {
    const auto& F = *ctx_;
    CycInt acc(F.p());
    for (i64 i = 0; i < F.size(); ++i) {
      const Elem y = F.element(i);
      acc += s.coefficients[static_cast<std::size_t>(i)].omega_shift(F.abs_trace(F.mul(y, x)));
    }
    CycInt out(F.p());
    for (std::size_t j = 0; j < acc.coeffs().size(); ++j) {
      if (acc.coeffs()[j] % F.size() != 0) throw Error(Errc::OracleMismatch, "inverse transform not divisible by p^n");
    }
    std::vector<i64> full(static_cast<std::size_t>(F.p()), 0);
    for (std::size_t j = 0; j < acc.coeffs().size(); ++j) full[j] = acc.coeffs()[j] / F.size();
    return CycInt::from_full(full);
  }

  [[nodiscard]] bool is_bent(const Spectrum& s) const {
    for (const auto& z : s.coefficients)
      if (z.norm_squared() != CycInt::integer(ctx_->p(), ctx_->size())) return false;
    return true;
  }

  /// Every coefficient lies in {-p^(n/2) w^j}.
  [[nodiscard]] bool is_weakly_regular_neg(const Spectrum& s) const {
    const auto& F = *ctx_;
    const i64 root = es_->params().p2k();
    std::vector<CycInt> allowed;
    for (i64 j = 0; j < F.p(); ++j) allowed.push_back(CycInt::omega_power(F.p(), j).scale(-root));
    for (const auto& z : s.coefficients)
      if (std::find(allowed.begin(), allowed.end(), z) == allowed.end()) return false;
    return true;
  }

  /// For f = Tr_n(x^d + x^2): scans GF(p^k) for roots of
  ///   y^(p^2k+1) + (y^2+X)^((p^2k+1)/2) + y^(p^k(p^2k+1)) + (y^2+X)^(p^k(p^2k+1)/2)
  /// and compares -p^2k w^(Tr_k(x0) * 4^-1) with the brute-force coefficient.
  /// Throws RootCountViolation unless exactly one root exists.
  [[nodiscard]] RootReport root_characterization(Elem y) const {
    const auto& F = *ctx_;
    const auto& P = es_->params();
    const i64 pk = P.pk(), p2k = P.p2k();
    const int k = static_cast<int>(P.k);
    const Elem y2 = F.mul(y, y);
    const Elem c0 = F.add(F.pow(y, p2k + 1), F.pow(y, checked_mul(pk, p2k + 1)));
    RootReport rep;
    rep.y = y;
    for (Elem x : es_->jacobsthal().base_elements()) {
      const Elem s = F.add(y2, x);
      const Elem v = F.add(c0, F.add(F.pow(s, (p2k + 1) / 2), F.pow(s, checked_mul(pk, p2k + 1) / 2)));
      if (v.is_zero()) {
        if (rep.root_count == 0) rep.x0 = x;
        ++rep.root_count;
      }
    }
    if (rep.root_count != 1)
      throw Error(Errc::RootCountViolation, std::to_string(rep.root_count) + " roots at y=" + F.format_log(y));
    const i64 inv4 = inverse_mod(4, F.p());
    const i64 tr = F.abs_trace(rep.x0, k);
    rep.predicted = CycInt::omega_power(F.p(), tr * inv4).scale(-p2k);
    rep.actual = walsh_coeff({F.one(), F.one()}, y);
    if (F.contains(es_->gf2k(), y2)) rep.special_case_ok = rep.x0 == F.neg(F.rel_trace(y2, 2 * k, k));
    return rep;
  }

 private:
  [[nodiscard]] CycInt coeff_from_values(const std::vector<std::uint8_t>& vals, Elem y) const {
    const auto& F = *ctx_;
    const i64 ord = F.order();
    OmegaCounter acc(F.p());
    acc.add(vals[static_cast<std::size_t>(ord)]);
    if (y.is_zero()) {
      for (i64 e = 0; e < ord; ++e) acc.add(vals[static_cast<std::size_t>(e)]);
    } else if (F.has_tables()) {
      i64 ey = F.discrete_log(y);
      for (i64 e = 0; e < ord; ++e) {
        acc.add(vals[static_cast<std::size_t>(e)] - F.trace_of_power(ey));
        if (++ey == ord) ey = 0;
      }
    } else {
      for (i64 e = 0; e < ord; ++e) acc.add(vals[static_cast<std::size_t>(e)] - F.abs_trace(F.mul(y, F.exp(e))));
    }
    return acc.value();
  }

  const ExpSum* es_;
  const FieldCtx* ctx_;
};

}  // namespace charsum
