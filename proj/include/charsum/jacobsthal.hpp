#pragma once

// Jacobsthal sums H_n(a) and companion sums I_n(a) over GF(p^2k), and the
// reduction of H_{p^k+1}(a) to an affine point count on
// f^2 = z^3 - A z^2 + C z over GF(p^k).

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "charsum/field.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

struct JacobsthalRecord {
  Elem a;
  i64 order_n = 0;
  i64 H = 0;
  i64 I = 0;
  i64 I2 = 0;  // I_{2n}(a)
  std::optional<i64> curve_N;
  double bound_ratio = 0.0;  // |H| / (2 p^(k/2) (p^k + 1))
};

/// a = a0 + 2 * mu^(1/2) * a1 with a0, a1 in GF(p^k).
struct HalfBasis {
  Elem a0;
  Elem a1;
};

struct BoundScan {
  std::vector<JacobsthalRecord> records;  // sorted by discrete log of a
  double max_ratio = 0.0;
  Elem argmax;
  /// H^2 == 4 p^k (p^k + 1)^2 for some a (only possible for even k).
  bool bound_attained = false;
};

class Jacobsthal {
 public:
  /// `ctx` must contain GF(p^2k).
  Jacobsthal(const FieldCtx& ctx, const FieldParams& params)
      : ctx_(&ctx),
        k_(params.k),
        pk_(params.pk()),
        big_(ctx.subfield(static_cast<int>(2 * params.k))),
        small_(ctx.subfield(static_cast<int>(params.k))) {
    if (ctx.p() != params.p) throw Error(Errc::DegreeUnsupported, "context characteristic differs from params");
    big_elems_ = ctx.elements(big_);
    small_elems_ = ctx.elements(small_);
    if (small_.cofactor % 2 != 0) throw Error(Errc::NoSolution, "odd exponent for mu");
    mu_sqrt_ = ctx.exp(small_.cofactor / 2);
  }

  [[nodiscard]] const SubfieldView& view() const noexcept { return big_; }
  [[nodiscard]] const SubfieldView& base_view() const noexcept { return small_; }
  [[nodiscard]] i64 pk() const noexcept { return pk_; }
  [[nodiscard]] Elem mu() const noexcept { return small_.generator; }
  [[nodiscard]] Elem mu_sqrt() const noexcept { return mu_sqrt_; }
  /// GF(p^2k) as {0, nu^0, nu^1, ...}.
  [[nodiscard]] const std::vector<Elem>& elements() const noexcept { return big_elems_; }
  [[nodiscard]] const std::vector<Elem>& base_elements() const noexcept { return small_elems_; }

  [[nodiscard]] bool in_base(Elem x) const { return ctx_->contains(small_, x); }

  /// H_n(a) = sum over x in GF(p^2k) of eta(x^(n+1) + a x).
  [[nodiscard]] i64 jacobsthal_sum(i64 n, Elem a) const {
    check_arg(a);
    i64 s = 0;
    for (Elem x : big_elems_) {
      const Elem v = ctx_->add(ctx_->pow(x, n + 1), ctx_->mul(a, x));
      s += ctx_->quadratic_character_unchecked(v, big_);
    }
    return s;
  }

  /// I_n(a) = sum over nonzero x in GF(p^2k) of eta(x^n + a).
  [[nodiscard]] i64 companion_sum(i64 n, Elem a) const {
    check_arg(a);
    i64 s = 0;
    for (std::size_t i = 1; i < big_elems_.size(); ++i) {
      const Elem v = ctx_->add(ctx_->pow(big_elems_[i], n), a);
      s += ctx_->quadratic_character_unchecked(v, big_);
    }
    return s;
  }

  /// Closed form of I_{p^k+1}(a) for a outside GF(p^k).
  [[nodiscard]] i64 companion_closed_form(Elem a) const {
    return -(pk_ + 1) * (ctx_->quadratic_character(a, big_) + 1);
  }

  [[nodiscard]] HalfBasis decompose_half_basis(Elem a) const {
    if (!ctx_->contains(big_, a)) throw Error(Errc::NotInSubfield, "half-basis decomposition");
    // The conjugate of mu^(1/2) over GF(p^k) is -mu^(1/2).
    const Elem conj = ctx_->frobenius(a, k_);
    const Elem a0 = ctx_->div(ctx_->add(a, conj), ctx_->from_int(2));
    const Elem a1 = ctx_->div(ctx_->sub(a, conj), ctx_->mul(ctx_->from_int(4), mu_sqrt_));
    return {a0, a1};
  }

  [[nodiscard]] Elem recompose(const HalfBasis& h) const {
    return ctx_->add(h.a0, ctx_->mul(ctx_->mul(ctx_->from_int(2), mu_sqrt_), h.a1));
  }

  /// Affine points (z, f) in GF(p^k)^2 on f^2 = z^3 - A z^2 + C z.
  [[nodiscard]] i64 curve_point_count(Elem A, Elem C) const {
    if (C.is_zero()) throw Error(Errc::ZeroC, "curve coefficient C");
    if (!in_base(A) || !in_base(C)) throw Error(Errc::NotInSubfield, "curve coefficients");
    i64 n = 0;
    for (Elem z : small_elems_) {
      const Elem z2 = ctx_->mul(z, z);
      const Elem rhs = ctx_->add(ctx_->sub(ctx_->mul(z2, z), ctx_->mul(A, z2)), ctx_->mul(C, z));
      n += 1 + ctx_->quadratic_character_unchecked(rhs, small_);
    }
    return n;
  }

  /// Point count for the curve attached to a in GF(p^2k) \ GF(p^k):
  /// A = a0, C = mu * a1^2.
  [[nodiscard]] i64 curve_point_count_for(Elem a) const {
    const auto h = decompose_half_basis(a);
    return curve_point_count(h.a0, ctx_->mul(mu(), ctx_->mul(h.a1, h.a1)));
  }

  /// |H| <= 2 p^(k/2) (p^k + 1), compared exactly by squaring.
  [[nodiscard]] bool within_bound(i64 H) const {
    return static_cast<__int128>(H) * H <= static_cast<__int128>(4) * pk_ * (pk_ + 1) * (pk_ + 1);
  }

  [[nodiscard]] double bound_ratio(i64 H) const {
    return std::abs(static_cast<double>(H)) /
           (2.0 * std::sqrt(static_cast<double>(pk_)) * static_cast<double>(pk_ + 1));
  }

  /// Full record at order n = p^k + 1.
  [[nodiscard]] JacobsthalRecord record(Elem a) const {
    JacobsthalRecord r;
    r.a = a;
    r.order_n = pk_ + 1;
    r.H = jacobsthal_sum(r.order_n, a);
    r.I = companion_sum(r.order_n, a);
    r.I2 = companion_sum(2 * r.order_n, a);
    if (!in_base(a)) r.curve_N = curve_point_count_for(a);
    r.bound_ratio = bound_ratio(r.H);
    return r;
  }

  /// Every a in GF(p^2k) \ GF(p^k); throws BoundViolation on |H| above the bound.
  [[nodiscard]] BoundScan bound_scan(unsigned threads = 1) const {
    std::vector<Elem> targets;
    for (std::size_t i = 1; i < big_elems_.size(); ++i)
      if (!in_base(big_elems_[i])) targets.push_back(big_elems_[i]);
    BoundScan out;
    out.records.resize(targets.size());
    parallel_for(targets.size(), threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) out.records[i] = record(targets[i]);
    });
    for (const auto& r : out.records) {
      if (!within_bound(r.H))
        throw Error(Errc::BoundViolation, "H = " + std::to_string(r.H) + " at " + ctx_->format_log(r.a));
      if (static_cast<__int128>(r.H) * r.H == static_cast<__int128>(4) * pk_ * (pk_ + 1) * (pk_ + 1))
        out.bound_attained = true;
      if (r.bound_ratio > out.max_ratio) {
        out.max_ratio = r.bound_ratio;
        out.argmax = r.a;
      }
    }
    return out;
  }

 private:
  void check_arg(Elem a) const {
    if (a.is_zero()) throw Error(Errc::ZeroArgument, "Jacobsthal argument");
    if (!ctx_->contains(big_, a)) throw Error(Errc::NotInSubfield, "Jacobsthal argument");
  }

  const FieldCtx* ctx_;
  i64 k_;
  i64 pk_;
  SubfieldView big_;
  SubfieldView small_;
  std::vector<Elem> big_elems_;
  std::vector<Elem> small_elems_;
  Elem mu_sqrt_;
};

}  // namespace charsum
