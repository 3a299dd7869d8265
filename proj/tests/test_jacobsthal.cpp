#include <gtest/gtest.h>

#include "charsum/jacobsthal.hpp"
#include "oracle.hpp"

using namespace charsum;

namespace {

struct NaiveTower {
  oracle::NaiveField O;
  std::set<std::int64_t> squares;
  std::int64_t pk;
  std::vector<oracle::Poly> base;  // GF(p^k) inside GF(p^2k)

  NaiveTower(i64 p, i64 k) : O(oracle::first_primitive(p, static_cast<int>(2 * k))), squares(O.squares()) {
    pk = 1;
    for (i64 i = 0; i < k; ++i) pk *= p;
    for (const auto& x : O.all())
      if (O.pow(x, pk) == x) base.push_back(x);
  }

  oracle::Poly inv(const oracle::Poly& x) const { return O.pow(x, O.size() - 2); }
  oracle::Poly scal(std::int64_t c) const { return O.from_index(((c % O.p) + O.p) % O.p); }

  /// Affine points (z, f) in GF(p^k)^2 on f^2 = z^3 - A z^2 + C z for the
  /// curve attached to a.
  std::int64_t curve_points(const oracle::Poly& a) const {
    oracle::Poly gen = O.zero();
    gen[1] = 1;
    const auto musqrt = O.pow(gen, (pk + 1) / 2);
    const auto mu = O.mul(musqrt, musqrt);
    const auto conj = O.pow(a, pk);
    const auto neg_conj = O.mul(scal(-1), conj);
    const auto a0 = O.mul(O.add(a, conj), inv(scal(2)));
    const auto a1 = O.mul(O.add(a, neg_conj), inv(O.mul(scal(4), musqrt)));
    const auto A = a0, C = O.mul(mu, O.mul(a1, a1));
    std::int64_t n = 0;
    for (const auto& z : base) {
      const auto z2 = O.mul(z, z);
      const auto rhs = O.add(O.add(O.mul(z2, z), O.mul(scal(-1), O.mul(A, z2))), O.mul(C, z));
      for (const auto& f : base) n += O.mul(f, f) == rhs;
    }
    return n;
  }
};

const std::pair<i64, i64> kSizes[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};

}  // namespace

TEST(Jacobsthal, SumsMatchOracle) {
  for (auto [p, k] : {std::pair<i64, i64>{3, 1}, {5, 1}, {7, 1}}) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Jacobsthal jac(F, P);
    NaiveTower T(p, k);
    for (i64 i = 1; i < F.size(); ++i) {
      const Elem a = F.element(i);
      const auto oa = T.O.from_index(i);
      for (i64 n : {i64{1}, i64{2}, P.pk() + 1}) {
        ASSERT_EQ(jac.jacobsthal_sum(n, a), oracle::jacobsthal_H(T.O, T.squares, n, oa)) << "n=" << n;
        ASSERT_EQ(jac.companion_sum(n, a), oracle::companion_I(T.O, T.squares, n, oa)) << "n=" << n;
      }
    }
  }
}

TEST(Jacobsthal, CompanionClosedForm) {
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 4 * k);
    Jacobsthal jac(F, P);
    i64 checked = 0;
    for (Elem a : jac.elements()) {
      if (a.is_zero() || jac.in_base(a)) continue;
      ASSERT_EQ(jac.companion_sum(P.pk() + 1, a), jac.companion_closed_form(a));
      ++checked;
    }
    EXPECT_EQ(checked, P.p2k() - P.pk());
  }
}

TEST(Jacobsthal, CurveIdentityAgainstOracle) {
  for (auto [p, k] : {std::pair<i64, i64>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Jacobsthal jac(F, P);
    NaiveTower T(p, k);
    const i64 n = P.pk() + 1;
    for (i64 i = 1; i < F.size(); ++i) {
      const Elem a = F.element(i);
      if (jac.in_base(a)) continue;
      const auto oa = T.O.from_index(i);
      const std::int64_t H = oracle::jacobsthal_H(T.O, T.squares, n, oa);
      const std::int64_t N = T.curve_points(oa);
      ASSERT_EQ(H % n, 0);
      ASSERT_EQ(H / n, N - P.pk()) << "a index " << i;
      ASSERT_EQ(jac.curve_point_count_for(a), N);
      ASSERT_EQ(jac.jacobsthal_sum(n, a), H);
    }
  }
}

TEST(Jacobsthal, BoundHolds) {
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Jacobsthal jac(F, P);
    const auto scan = jac.bound_scan();
    EXPECT_EQ(static_cast<i64>(scan.records.size()), P.p2k() - P.pk());
    for (const auto& r : scan.records) {
      EXPECT_TRUE(jac.within_bound(r.H));
      EXPECT_LE(r.bound_ratio, 1.0);
      ASSERT_TRUE(r.curve_N.has_value());
      EXPECT_EQ(r.H / (P.pk() + 1), *r.curve_N - P.pk());
    }
    EXPECT_GT(scan.max_ratio, 0.0);
    if (k % 2 == 1) EXPECT_FALSE(scan.bound_attained);  // 2 p^(k/2) (p^k+1) is irrational
  }
}

TEST(Jacobsthal, BoundComparisonIsExact) {
  const auto P = FieldParams::make(3, 2);
  const auto F = build_context(P, 4);
  Jacobsthal jac(F, P);
  // 2 * 3 * 10 = 60 is the bound itself at p^k = 9.
  EXPECT_TRUE(jac.within_bound(60));
  EXPECT_TRUE(jac.within_bound(-60));
  EXPECT_FALSE(jac.within_bound(61));
}

TEST(Jacobsthal, ScanIsThreadIndependent) {
  const auto P = FieldParams::make(3, 2);
  const auto F = build_context(P, 4);
  Jacobsthal jac(F, P);
  const auto a = jac.bound_scan(1), b = jac.bound_scan(4);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].a, b.records[i].a);
    EXPECT_EQ(a.records[i].H, b.records[i].H);
  }
  EXPECT_EQ(a.argmax, b.argmax);
}

TEST(Jacobsthal, HalfBasisRoundTrip) {
  const auto P = FieldParams::make(5, 1);
  const auto F = build_context(P, 4);
  Jacobsthal jac(F, P);
  EXPECT_FALSE(jac.in_base(jac.mu_sqrt()));
  EXPECT_EQ(F.mul(jac.mu_sqrt(), jac.mu_sqrt()), jac.mu());
  for (Elem a : jac.elements()) {
    const auto h = jac.decompose_half_basis(a);
    EXPECT_TRUE(jac.in_base(h.a0));
    EXPECT_TRUE(jac.in_base(h.a1));
    EXPECT_EQ(jac.recompose(h), a);
    if (!jac.in_base(a)) {
      EXPECT_FALSE(h.a1.is_zero());
    }
  }
  try {
    (void)jac.decompose_half_basis(F.xi());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInSubfield);
  }
}

TEST(Jacobsthal, ArgumentErrors) {
  const auto P = FieldParams::make(3, 1);
  const auto F = build_context(P, 4);
  Jacobsthal jac(F, P);
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Overflow;
  };
  EXPECT_EQ(code_of([&] { (void)jac.jacobsthal_sum(4, F.zero()); }), Errc::ZeroArgument);
  EXPECT_EQ(code_of([&] { (void)jac.jacobsthal_sum(4, F.xi()); }), Errc::NotInSubfield);
  EXPECT_EQ(code_of([&] { (void)jac.curve_point_count(F.one(), F.zero()); }), Errc::ZeroC);
}

TEST(Jacobsthal, RecordFields) {
  const auto P = FieldParams::make(3, 1);
  const auto F = build_context(P, 2);
  Jacobsthal jac(F, P);
  const Elem a = F.xi();
  const auto r = jac.record(a);
  EXPECT_EQ(r.order_n, 4);
  EXPECT_EQ(r.H, jac.jacobsthal_sum(4, a));
  EXPECT_EQ(r.I2, jac.companion_sum(8, a));
  EXPECT_FALSE(jac.record(F.one()).curve_N.has_value());
}
