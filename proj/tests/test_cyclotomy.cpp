#include <gtest/gtest.h>

#include <map>

#include "charsum/cyclotomy.hpp"
#include "oracle.hpp"

using namespace charsum;

namespace {

/// Cyclotomic numbers of order e in the naive field, classes by log mod e.
std::vector<std::vector<i64>> naive_table(const oracle::NaiveField& O, i64 e) {
  std::map<std::int64_t, i64> log;
  oracle::Poly x = O.one(), gen = O.zero();
  if (O.m == 1) gen[0] = ((-O.modulus[0]) % O.p + O.p) % O.p;
  else gen[1] = 1;
  for (i64 i = 0; i < O.size() - 1; ++i) {
    log[O.index(x)] = i;
    x = O.mul(x, gen);
  }
  std::vector<std::vector<i64>> t(static_cast<std::size_t>(e), std::vector<i64>(static_cast<std::size_t>(e), 0));
  for (const auto& [idx, l] : log) {
    const auto y = O.add(O.from_index(idx), O.one());
    if (O.is_zero(y)) continue;
    ++t[static_cast<std::size_t>(l % e)][static_cast<std::size_t>(log.at(O.index(y)) % e)];
  }
  return t;
}

const std::pair<i64, i64> kSizes[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};

}  // namespace

TEST(Cyclotomy, SmallestTable) {
  const auto P = FieldParams::make(3, 1);
  const auto F = build_context(P, 2);
  Cyclotomy cyc(F, P);
  const auto t = cyc.full_table();
  const std::vector<std::vector<i64>> want{{1, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
  EXPECT_EQ(t.table, want);
  EXPECT_EQ(Cyclotomy::to_csv(t), "i\\j,0,1,2,3\n0,1,0,0,0\n1,0,0,1,1\n2,0,1,0,1\n3,0,1,1,0\n");
}

TEST(Cyclotomy, MatchesNaiveEnumeration) {
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Cyclotomy cyc(F, P);
    const auto O = oracle::first_primitive(p, static_cast<int>(2 * k));
    EXPECT_EQ(cyc.full_table().table, naive_table(O, P.pk() + 1)) << p << "," << k;
  }
}

TEST(Cyclotomy, ClosedFormInsideTower) {
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    for (i64 m : {2 * k, 4 * k}) {
      const auto F = build_context(P, m);
      Cyclotomy cyc(F, P);
      const auto t = cyc.full_table();
      EXPECT_TRUE(cyc.check_closed_form(t).pass()) << p << "," << k << " m=" << m;
      EXPECT_EQ(t.total(), P.p2k() - 2);
    }
  }
}

TEST(Cyclotomy, SingleEntriesAgreeWithTable) {
  const auto P = FieldParams::make(5, 1);
  const auto F = build_context(P, 2);
  Cyclotomy cyc(F, P);
  const auto t = cyc.full_table();
  for (i64 i = 0; i < cyc.order(); ++i)
    for (i64 j = 0; j < cyc.order(); ++j) EXPECT_EQ(cyc.cyclotomic_number(i, j), t.table[i][j]);
  try {
    (void)cyc.cyclotomic_number(cyc.order(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
  EXPECT_THROW((void)cyc.cyclotomic_number(-1, 0), Error);
}

TEST(Cyclotomy, MinusOneShiftGivesSameTable) {
  // -1 = nu^((p^k-1)/2 * (p^k+1)) lies in C_0, so x -> -x carries the x - 1
  // counts onto the x + 1 counts.
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Cyclotomy cyc(F, P);
    EXPECT_EQ(cyc.class_index(F.from_int(-1)), 0);
    EXPECT_EQ(cyc.full_table(1, -1).table, cyc.full_table(1, 1).table);
  }
}

TEST(Cyclotomy, ThreadCountDoesNotChangeTable) {
  const auto P = FieldParams::make(3, 2);
  const auto F = build_context(P, 4);
  Cyclotomy cyc(F, P);
  const auto one = cyc.full_table(1);
  for (unsigned th : {2u, 3u, 8u}) EXPECT_EQ(cyc.full_table(th).table, one.table);
}

TEST(Cyclotomy, ClassSums) {
  for (auto [p, k] : kSizes) {
    const auto P = FieldParams::make(p, k);
    const auto F = build_context(P, 2 * k);
    Cyclotomy cyc(F, P);
    const auto pts = cyc.pt_sums();
    ASSERT_EQ(static_cast<i64>(pts.size()), P.pk() + 1);
    for (i64 t = 0; t <= P.pk(); ++t) {
      const i64 want = t == (P.pk() + 1) / 2 ? P.pk() - 1 : -1;
      EXPECT_EQ(pts[t], CycInt::integer(p, want)) << p << "," << k << " t=" << t;
      EXPECT_EQ(cyc.pt_closed_form(t), want);
    }
    // Summing over all classes gives sum over GF(p^2k)* of w^Tr = -1.
    CycInt total(p);
    for (const auto& v : pts) total += v;
    EXPECT_EQ(total, CycInt::integer(p, -1));
  }
}

TEST(Cyclotomy, ClassIndexPartitionsGroup) {
  const auto P = FieldParams::make(5, 1);
  const auto F = build_context(P, 4);
  Cyclotomy cyc(F, P);
  std::vector<i64> sizes(static_cast<std::size_t>(cyc.order()), 0);
  for (Elem x : F.elements(cyc.view()))
    if (!x.is_zero()) ++sizes[static_cast<std::size_t>(cyc.class_index(x))];
  for (auto s : sizes) EXPECT_EQ(s, P.pk() - 1);
}
