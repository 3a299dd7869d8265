#pragma once

// p-ary m-sequences s(t) = Tr_n(xi^t), decimations, and periodic
// cross-correlation in Z[w].
//
// Link to the exponential sum: with u = s decimated by d, v = s decimated by 2
// (both of period P = (p^n - 1)/2) and C(tau) = sum_t w^(u(t+tau) - v(t)),
//   S_f(0) for (a, b) = (-xi^(d tau), 1)  equals  1 + 2 C(tau).
// Writing x = xi^t, the sum over GF(p^n)* covers each t mod P twice; -v(t) is
// v(t + (p^n-1)/4) because (p^n-1)/2 is even, and xi^(d(p^n-1)/4) = -1 because
// d/2 is odd. The relation is checked against the brute-force exponential sum
// for every tau in the tests.

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/cycint.hpp"
#include "charsum/field.hpp"

namespace charsum {

struct PSequence {
  i64 period = 0;
  std::vector<i64> symbols;  // length == period
  std::string origin;
};

inline PSequence m_sequence(const FieldCtx& F) {
  PSequence s;
  s.period = F.order();
  s.symbols.resize(static_cast<std::size_t>(s.period));
  for (i64 t = 0; t < s.period; ++t) s.symbols[static_cast<std::size_t>(t)] = F.trace_of_power(t);
  s.origin = "trace m-sequence";
  return s;
}

/// u(t) = s(e t mod period), truncated to its period period / gcd(e, period).
inline PSequence decimate(const PSequence& s, i64 e) {
  if (e < 1) throw Error(Errc::IndexOutOfRange, "decimation must be positive");
  PSequence u;
  u.period = s.period / std::gcd(e, s.period);
  u.symbols.resize(static_cast<std::size_t>(u.period));
  for (i64 t = 0; t < u.period; ++t) u.symbols[static_cast<std::size_t>(t)] = s.symbols[static_cast<std::size_t>(mulmod(e, t, s.period))];
  u.origin = s.origin + " decimated by " + std::to_string(e);
  return u;
}

/// sum_{t < period} w^(u(t+tau) - v(t)).
inline CycInt cross_correlation(const PSequence& u, const PSequence& v, i64 tau, i64 p) {
  if (u.period != v.period) throw Error(Errc::PeriodMismatch, std::to_string(u.period) + " vs " + std::to_string(v.period));
  OmegaCounter acc(p);
  const i64 P = u.period;
  for (i64 t = 0; t < P; ++t)
    acc.add(u.symbols[static_cast<std::size_t>(mod(t + tau, P))] - v.symbols[static_cast<std::size_t>(t)]);
  return acc.value();
}

/// The pair (u, v) = (s decimated by d, s decimated by 2).
struct DecimatedPair {
  PSequence u;
  PSequence v;
};

inline DecimatedPair decimated_pair(const FieldCtx& F, const FieldParams& params) {
  const auto s = m_sequence(F);
  return {decimate(s, params.d()), decimate(s, 2)};
}

/// The coefficient a whose S_f(0) (with b = 1) equals 1 + 2 C(tau).
inline Elem correlation_coefficient(const FieldCtx& F, const FieldParams& params, i64 tau) {
  return F.neg(F.exp(mulmod(params.d(), tau, F.order())));
}

/// 1 + 2 C(tau).
inline CycInt correlation_to_exp_sum(const CycInt& c) { return CycInt::integer(c.prime(), 1) + c.scale(2); }

inline std::string to_line(const PSequence& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.symbols.size(); ++i) os << (i ? "," : "") << s.symbols[i];
  return os.str();
}

}  // namespace charsum
