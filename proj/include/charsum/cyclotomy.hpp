#pragma once

// Cyclotomic classes of order p^k + 1 in GF(p^2k)*, their cyclotomic numbers
// and the additive-character sums over each class.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/cycint.hpp"
#include "charsum/field.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

struct CycNumberTable {
  i64 order = 0;                        // p^k + 1
  std::vector<std::vector<i64>> table;  // table[i][j] = (i, j)

  [[nodiscard]] i64 total() const {
    i64 s = 0;
    for (const auto& row : table)
      for (auto v : row) s = checked_add(s, v);
    return s;
  }
};

struct TableMismatch {
  i64 i = 0, j = 0, observed = 0, expected = 0;
};

struct TableReport {
  std::vector<TableMismatch> mismatches;
  [[nodiscard]] bool pass() const noexcept { return mismatches.empty(); }
};

class Cyclotomy {
 public:
  /// `ctx` must contain GF(p^2k), i.e. 2k divides its degree.
  Cyclotomy(const FieldCtx& ctx, const FieldParams& params)
      : ctx_(&ctx), pk_(params.pk()), sub_(ctx.subfield(static_cast<int>(2 * params.k))), k_(params.k) {
    if (ctx.p() != params.p) throw Error(Errc::DegreeUnsupported, "context characteristic differs from params");
  }

  [[nodiscard]] i64 order() const noexcept { return pk_ + 1; }
  /// Generator of GF(p^2k)* defining the classes.
  [[nodiscard]] Elem nu() const noexcept { return sub_.generator; }
  [[nodiscard]] const SubfieldView& view() const noexcept { return sub_; }

  [[nodiscard]] i64 class_index(Elem x) const { return ctx_->discrete_log(x, sub_) % order(); }

  /// (i, j) counted directly: x in C_i with x + 1 in C_j.
  [[nodiscard]] i64 cyclotomic_number(i64 i, i64 j) const {
    if (i < 0 || j < 0 || i >= order() || j >= order()) throw Error(Errc::IndexOutOfRange, "cyclotomic index");
    i64 count = 0;
    for (i64 e = i; e < sub_.order; e += order()) {
      const Elem y = ctx_->add(ctx_->pow(nu(), e), ctx_->one());
      if (!y.is_zero() && class_index(y) == j) ++count;
    }
    return count;
  }

  /// All (i, j) in one pass over GF(p^2k)*. With `shift = -1` counts x - 1
  /// instead of x + 1.
  [[nodiscard]] CycNumberTable full_table(unsigned threads = 1, int shift = 1) const {
    const auto n = static_cast<std::size_t>(order());
    const Elem delta = ctx_->from_int(shift);
    std::vector<std::vector<std::vector<i64>>> partial(std::max(1u, threads),
                                                       std::vector<std::vector<i64>>(n, std::vector<i64>(n, 0)));
    const auto count = static_cast<std::size_t>(sub_.order);
    const std::size_t chunk = (count + partial.size() - 1) / partial.size();
    parallel_for(partial.size(), threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t w = b; w < e; ++w) {
        auto& local = partial[w];
        for (std::size_t idx = w * chunk; idx < std::min(count, (w + 1) * chunk); ++idx) {
          const Elem x = ctx_->pow(nu(), static_cast<i64>(idx));
          const Elem y = ctx_->add(x, delta);
          if (y.is_zero()) continue;
          local[idx % n][static_cast<std::size_t>(class_index(y))] += 1;
        }
      }
    });
    CycNumberTable out{order(), std::vector<std::vector<i64>>(n, std::vector<i64>(n, 0))};
    for (const auto& local : partial)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.table[i][j] += local[i][j];
    return out;
  }

  /// Closed form of (i, j) for order p^k + 1.
  [[nodiscard]] static i64 closed_form(i64 pk, i64 i, i64 j) {
    if (i == 0 && j == 0) return pk - 2;
    if (i != j && i != 0 && j != 0) return 1;
    return 0;
  }

  [[nodiscard]] TableReport check_closed_form(const CycNumberTable& t) const {
    TableReport r;
    for (i64 i = 0; i < t.order; ++i)
      for (i64 j = 0; j < t.order; ++j) {
        const i64 want = closed_form(pk_, i, j);
        const i64 got = t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (got != want) r.mismatches.push_back({i, j, got, want});
      }
    return r;
  }

  /// P_t = sum over x in C_t of w^Tr_2k(x), exactly.
  [[nodiscard]] std::vector<CycInt> pt_sums() const {
    std::vector<OmegaCounter> acc(static_cast<std::size_t>(order()), OmegaCounter(ctx_->p()));
    Elem x = ctx_->one();
    for (i64 e = 0; e < sub_.order; ++e) {
      acc[static_cast<std::size_t>(e % order())].add(ctx_->abs_trace(x, static_cast<int>(2 * k_)));
      x = ctx_->mul(x, nu());
    }
    std::vector<CycInt> out;
    out.reserve(acc.size());
    for (const auto& a : acc) out.push_back(a.value());
    return out;
  }

  [[nodiscard]] i64 pt_closed_form(i64 t) const { return t == order() / 2 ? pk_ - 1 : -1; }

  /// Header "i\j,0,...,p^k", one row per i.
  [[nodiscard]] static std::string to_csv(const CycNumberTable& t) {
    std::ostringstream os;
    os << "i\\j";
    for (i64 j = 0; j < t.order; ++j) os << ',' << j;
    os << '\n';
    for (i64 i = 0; i < t.order; ++i) {
      os << i;
      for (auto v : t.table[static_cast<std::size_t>(i)]) os << ',' << v;
      os << '\n';
    }
    return os.str();
  }

 private:
  const FieldCtx* ctx_;
  i64 pk_;
  SubfieldView sub_;
  i64 k_;
};

}  // namespace charsum
