#pragma once

// Checked 64-bit integer helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <vector>

#include "charsum/error.hpp"

namespace charsum {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "multiplication");
  return r;
}

inline i64 ipow(i64 base, i64 exp) {
  i64 r = 1;
  for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Least nonnegative residue of `a` modulo `m` (m > 0).
constexpr i64 mod(i64 a, i64 m) noexcept {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  const auto r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<i64>(r);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Inverse of `a` modulo `m`; requires gcd(a, m) == 1.
inline i64 inverse_mod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    const i64 q = g / r;
    i64 t = g - q * r; g = r; r = t;
    t = x - q * x1; x = x1; x1 = t;
  }
  if (g != 1) throw Error(Errc::NoSolution, "value not invertible modulo m");
  return mod(x, m);
}

/// Integer square root (floor).
inline i64 isqrt(i64 n) {
  i64 r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace charsum
