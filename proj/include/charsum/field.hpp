#pragma once

// Arithmetic in GF(p^m). Elements are packed as the base-p integer of their
// coefficient vector (constant term = least-significant digit); the smaller
// fields GF(p^k), GF(p^2k) of the tower live inside one context as
// Frobenius-fixed subsets.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "charsum/arith.hpp"

namespace charsum {

/// (p, k) of the binomial family over GF(p^4k).
struct FieldParams {
  i64 p = 3;
  i64 k = 1;

  static FieldParams make(i64 p, i64 k) {
    if (p == 2) throw Error(Errc::EvenCharacteristic, "p = 2");
    if (!is_prime(p)) throw Error(Errc::NonPrimeP, "p = " + std::to_string(p));
    if (k < 1) throw Error(Errc::DegreeUnsupported, "k must be positive");
    return FieldParams{p, k};
  }

  [[nodiscard]] i64 n() const { return 4 * k; }
  [[nodiscard]] i64 pk() const { return ipow(p, k); }
  [[nodiscard]] i64 p2k() const { return ipow(p, 2 * k); }
  [[nodiscard]] i64 p3k() const { return ipow(p, 3 * k); }
  [[nodiscard]] i64 pn() const { return ipow(p, 4 * k); }
  /// d = p^3k + p^2k - p^k + 1.
  [[nodiscard]] i64 d() const { return checked_add(checked_sub(checked_add(p3k(), p2k()), pk()), 1); }
};

struct Elem {
  u64 code = 0;

  [[nodiscard]] bool is_zero() const noexcept { return code == 0; }
  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

/// GF(p^sub_degree) seen inside a larger context.
struct SubfieldView {
  int degree = 0;
  i64 size = 0;      // p^degree
  i64 order = 0;     // p^degree - 1
  i64 cofactor = 0;  // (p^m - 1) / (p^degree - 1)
  Elem generator;    // xi^cofactor
};

struct BuildOptions {
  /// Log/antilog tables are built when p^m does not exceed this.
  i64 table_limit = i64{1} << 20;
};

class FieldCtx {
 public:
  /// Field of size p^m with the first primitive monic modulus in base-p
  /// encoding order.
  static FieldCtx with_degree(i64 p, int m, BuildOptions opts = {}) {
    if (p == 2) throw Error(Errc::EvenCharacteristic, "p = 2");
    if (!is_prime(p)) throw Error(Errc::NonPrimeP, "p = " + std::to_string(p));
    if (m < 1) throw Error(Errc::DegreeUnsupported, "degree must be positive");
    FieldCtx f;
    f.p_ = p;
    f.m_ = m;
    f.pw_.resize(static_cast<std::size_t>(m) + 1);
    f.pw_[0] = 1;
    for (int i = 1; i <= m; ++i) f.pw_[i] = checked_mul(f.pw_[i - 1], p);
    f.q_ = f.pw_[m];
    f.order_ = f.q_ - 1;
    f.order_primes_ = prime_divisors(f.order_);
    f.select_modulus();
    f.build_trace_basis();
    if (f.q_ <= opts.table_limit) f.build_tables();
    return f;
  }

  // ---- shape -------------------------------------------------------------

  [[nodiscard]] i64 p() const noexcept { return p_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] i64 size() const noexcept { return q_; }
  [[nodiscard]] i64 order() const noexcept { return order_; }
  [[nodiscard]] i64 p_pow(int i) const { return pw_.at(static_cast<std::size_t>(i)); }
  /// Monic modulus, coefficient of X^i at index i (length m+1).
  [[nodiscard]] const std::vector<i64>& modulus() const noexcept { return modulus_; }
  [[nodiscard]] bool has_tables() const noexcept { return !exp_.empty(); }

  [[nodiscard]] Elem zero() const noexcept { return Elem{0}; }
  [[nodiscard]] Elem one() const noexcept { return Elem{1}; }
  /// Class of X; generates the multiplicative group.
  [[nodiscard]] Elem xi() const { return from_coeffs(m_ == 1 ? std::vector<i64>{mod(-modulus_[0], p_)} : std::vector<i64>{0, 1}); }
  [[nodiscard]] Elem from_int(i64 v) const { return Elem{static_cast<u64>(mod(v, p_))}; }
  /// Element with index `i` in 0..p^m-1 (its base-p encoding).
  [[nodiscard]] Elem element(i64 i) const { return Elem{static_cast<u64>(i)}; }

  [[nodiscard]] std::vector<i64> coeffs(Elem x) const {
    std::vector<i64> c(static_cast<std::size_t>(m_));
    u64 v = x.code;
    for (auto& d : c) {
      d = static_cast<i64>(v % static_cast<u64>(p_));
      v /= static_cast<u64>(p_);
    }
    return c;
  }

  [[nodiscard]] Elem from_coeffs(const std::vector<i64>& c) const {
    u64 v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (i < static_cast<std::size_t>(m_)) v = v * static_cast<u64>(p_) + static_cast<u64>(mod(c[i], p_));
    }
    return Elem{v};
  }

  // ---- arithmetic --------------------------------------------------------

  [[nodiscard]] Elem add(Elem x, Elem y) const {
    const auto p = static_cast<u64>(p_);
    u64 a = x.code, b = y.code, r = 0, scale = 1;
    while (a != 0 || b != 0) {
      u64 s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * scale;
      scale *= p;
      a /= p;
      b /= p;
    }
    return Elem{r};
  }

  [[nodiscard]] Elem neg(Elem x) const {
    const auto p = static_cast<u64>(p_);
    u64 a = x.code, r = 0, scale = 1;
    while (a != 0) {
      const u64 s = a % p;
      r += (s == 0 ? 0 : p - s) * scale;
      scale *= p;
      a /= p;
    }
    return Elem{r};
  }

  [[nodiscard]] Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  [[nodiscard]] Elem mul(Elem x, Elem y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    if (has_tables()) {
      i64 e = log_[x.code] + log_[y.code];
      if (e >= order_) e -= order_;
      return Elem{exp_[static_cast<std::size_t>(e)]};
    }
    return from_coeffs(poly_mulmod(coeffs(x), coeffs(y)));
  }

  [[nodiscard]] Elem inv(Elem x) const {
    if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return pow(x, order_ - 1);
  }

  [[nodiscard]] Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  /// x^e; for nonzero x the exponent is reduced mod p^m - 1 (e may be negative).
  [[nodiscard]] Elem pow(Elem x, i64 e) const {
    if (x.is_zero()) {
      if (e < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
      return e == 0 ? one() : zero();
    }
    const i64 r = mod(e, order_);
    if (has_tables()) return Elem{exp_[static_cast<std::size_t>(mulmod(log_[x.code], r, order_))]};
    return from_coeffs(poly_pow(coeffs(x), r));
  }

  /// xi^e.
  [[nodiscard]] Elem exp(i64 e) const {
    if (has_tables()) return Elem{exp_[static_cast<std::size_t>(mod(e, order_))]};
    return pow(xi(), e);
  }

  // ---- Frobenius and traces ---------------------------------------------

  /// x^(p^i).
  [[nodiscard]] Elem frobenius(Elem x, i64 i) const { return pow(x, pw_[static_cast<std::size_t>(mod(i, m_))]); }

  /// Tr_m(x) as an integer in 0..p-1.
  [[nodiscard]] i64 abs_trace(Elem x) const {
    if (x.is_zero()) return 0;
    if (has_tables()) return trace_exp_[log_[x.code]];
    const auto c = coeffs(x);
    i64 t = 0;
    for (int i = 0; i < m_; ++i) t += c[i] * trace_basis_[i];
    return mod(t, p_);
  }

  /// Tr(xi^e) over the whole field; table lookup when available.
  [[nodiscard]] i64 trace_of_power(i64 e) const {
    if (has_tables()) return trace_exp_[static_cast<std::size_t>(mod(e, order_))];
    return abs_trace(exp(e));
  }

  /// Tr_{to}^{from}(x) = sum_{i < from/to} x^(p^(to*i)); x must lie in GF(p^from).
  [[nodiscard]] Elem rel_trace(Elem x, int from, int to) const {
    if (to <= 0 || from % to != 0 || m_ % from != 0) throw Error(Errc::DegreeUnsupported, "trace degrees");
    Elem acc = zero();
    for (int i = 0; i < from / to; ++i) acc = add(acc, frobenius(x, static_cast<i64>(to) * i));
    return acc;
  }

  /// Absolute trace of x in GF(p^sub_degree) down to GF(p), as an integer.
  [[nodiscard]] i64 abs_trace(Elem x, int sub_degree) const {
    return prime_value(rel_trace(x, sub_degree, 1));
  }

  /// Integer value of a prime-subfield element (its constant coefficient).
  [[nodiscard]] i64 prime_value(Elem x) const { return static_cast<i64>(x.code % static_cast<u64>(p_)); }

  // ---- subfields ---------------------------------------------------------

  [[nodiscard]] SubfieldView subfield(int degree) const {
    if (degree < 1 || m_ % degree != 0) throw Error(Errc::DegreeUnsupported, "subfield degree " + std::to_string(degree));
    SubfieldView v;
    v.degree = degree;
    v.size = pw_[static_cast<std::size_t>(degree)];
    v.order = v.size - 1;
    v.cofactor = order_ / v.order;
    v.generator = exp(v.cofactor);
    return v;
  }

  [[nodiscard]] bool contains(const SubfieldView& sub, Elem x) const { return frobenius(x, sub.degree) == x; }

  /// {0, g^0, g^1, ..., g^(order-1)} for the induced generator g.
  [[nodiscard]] std::vector<Elem> elements(const SubfieldView& sub) const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(sub.size));
    out.push_back(zero());
    Elem x = one();
    for (i64 j = 0; j < sub.order; ++j) {
      out.push_back(x);
      x = mul(x, sub.generator);
    }
    return out;
  }

  /// Quadratic character of the subfield: 0, +1 or -1.
  [[nodiscard]] int quadratic_character(Elem x, const SubfieldView& sub) const {
    if (x.is_zero()) return 0;
    if (!contains(sub, x)) throw Error(Errc::NotInSubfield, "quadratic character");
    return pow(x, sub.order / 2) == one() ? 1 : -1;
  }

  /// Quadratic character without the membership check (hot loops).
  [[nodiscard]] int quadratic_character_unchecked(Elem x, const SubfieldView& sub) const {
    if (x.is_zero()) return 0;
    if (has_tables()) {
      // x = xi^(cofactor * j); the character is (-1)^j.
      return ((log_[x.code] / sub.cofactor) & 1) == 0 ? 1 : -1;
    }
    return pow(x, sub.order / 2) == one() ? 1 : -1;
  }

  // ---- discrete logarithms ----------------------------------------------

  /// e in [0, p^m - 1) with xi^e = x.
  [[nodiscard]] i64 discrete_log(Elem x) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "discrete log of zero");
    if (has_tables()) return log_[x.code];
    return bsgs(x);
  }

  /// e in [0, p^m' - 1) with (induced generator)^e = x.
  [[nodiscard]] i64 discrete_log(Elem x, const SubfieldView& sub) const {
    if (x.is_zero()) throw Error(Errc::ZeroArgument, "discrete log of zero");
    if (!contains(sub, x)) throw Error(Errc::NotInSubfield, "discrete log");
    return discrete_log(x) / sub.cofactor;
  }

  // ---- text format -------------------------------------------------------

  /// "c0,c1,...,c_{m-1}" (missing trailing digits are zero) or "g^e".
  [[nodiscard]] Elem parse(std::string_view s) const {
    auto parse_int = [&](std::string_view t) {
      i64 v = 0;
      const auto* end = t.data() + t.size();
      auto [ptr, ec] = std::from_chars(t.data(), end, v);
      if (ec != std::errc{} || ptr != end || t.empty()) throw Error(Errc::ParseError, "bad integer '" + std::string(t) + "'");
      return v;
    };
    if (s.starts_with("g^")) return exp(parse_int(s.substr(2)));
    std::vector<i64> c;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      const i64 v = parse_int(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (v < 0 || v >= p_) throw Error(Errc::ParseError, "digit out of range in '" + std::string(s) + "'");
      c.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (c.size() > static_cast<std::size_t>(m_)) throw Error(Errc::ParseError, "too many digits in '" + std::string(s) + "'");
    return from_coeffs(c);
  }

  [[nodiscard]] std::string format_digits(Elem x) const {
    std::string s;
    const auto c = coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    return s;
  }

  /// "g^e", or "0" for the zero element.
  [[nodiscard]] std::string format_log(Elem x) const {
    return x.is_zero() ? std::string("0") : "g^" + std::to_string(discrete_log(x));
  }

  // ---- polynomial arithmetic (coefficient vectors mod the field modulus) --

  [[nodiscard]] std::vector<i64> poly_mulmod(const std::vector<i64>& a, const std::vector<i64>& b) const {
    return poly_mulmod(a, b, modulus_);
  }

 private:
  FieldCtx() = default;

  std::vector<i64> poly_mulmod(const std::vector<i64>& a, const std::vector<i64>& b, const std::vector<i64>& f) const {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<i64> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (std::size_t i = 2 * m - 1; i >= m; --i) {
      const i64 t = prod[i];
      if (t == 0) continue;
      prod[i] = 0;
      for (std::size_t j = 0; j < m; ++j) prod[i - m + j] = mod(prod[i - m + j] - t * f[j], p_);
    }
    prod.resize(m);
    return prod;
  }

  std::vector<i64> poly_pow(std::vector<i64> base, i64 e, const std::vector<i64>& f) const {
    std::vector<i64> r(static_cast<std::size_t>(m_), 0);
    r[0] = 1;
    while (e > 0) {
      if (e & 1) r = poly_mulmod(r, base, f);
      base = poly_mulmod(base, base, f);
      e >>= 1;
    }
    return r;
  }

  std::vector<i64> poly_pow(const std::vector<i64>& base, i64 e) const { return poly_pow(base, e, modulus_); }

  [[nodiscard]] bool root_is_primitive(const std::vector<i64>& f) const {
    std::vector<i64> x(static_cast<std::size_t>(m_), 0);
    std::vector<i64> one(static_cast<std::size_t>(m_), 0);
    one[0] = 1;
    if (m_ == 1) x[0] = mod(-f[0], p_);
    else x[1] = 1;
    if (poly_pow(x, order_, f) != one) return false;
    for (i64 r : order_primes_)
      if (poly_pow(x, order_ / r, f) == one) return false;
    return true;
  }

  void select_modulus() {
    for (i64 low = 0; low < q_; ++low) {
      std::vector<i64> f(static_cast<std::size_t>(m_) + 1, 0);
      i64 v = low;
      for (int i = 0; i < m_; ++i) {
        f[i] = v % p_;
        v /= p_;
      }
      f[m_] = 1;
      if (f[0] != 0 && root_is_primitive(f)) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw Error(Errc::NoSolution, "no primitive polynomial found");
  }

  void build_trace_basis() {
    trace_basis_.assign(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      std::vector<i64> xi(static_cast<std::size_t>(m_), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      std::vector<i64> acc(static_cast<std::size_t>(m_), 0);
      auto cur = xi;
      for (int j = 0; j < m_; ++j) {
        for (int t = 0; t < m_; ++t) acc[t] = (acc[t] + cur[t]) % p_;
        cur = poly_pow(cur, p_);
      }
      trace_basis_[i] = acc[0];
    }
  }

  void build_tables() {
    exp_.assign(static_cast<std::size_t>(order_), 0);
    log_.assign(static_cast<std::size_t>(q_), 0);
    trace_exp_.assign(static_cast<std::size_t>(order_), 0);
    const Elem g = xi();
    std::vector<i64> cur(static_cast<std::size_t>(m_), 0);
    cur[0] = 1;
    const auto gc = coeffs(g);
    for (i64 e = 0; e < order_; ++e) {
      const Elem x = from_coeffs(cur);
      exp_[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(x.code);
      log_[x.code] = static_cast<std::uint32_t>(e);
      i64 t = 0;
      for (int i = 0; i < m_; ++i) t += cur[i] * trace_basis_[i];
      trace_exp_[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(mod(t, p_));
      if (m_ == 1) {
        cur[0] = cur[0] * gc[0] % p_;
      } else {
        // multiply by X
        const i64 top = cur[m_ - 1];
        for (int i = m_ - 1; i > 0; --i) cur[i] = mod(cur[i - 1] - top * modulus_[i], p_);
        cur[0] = mod(-top * modulus_[0], p_);
      }
    }
  }

  [[nodiscard]] i64 bsgs(Elem x) const {
    const i64 step = isqrt(order_) + 1;
    std::unordered_map<u64, i64> baby;
    baby.reserve(static_cast<std::size_t>(step));
    Elem cur = one();
    const Elem g = xi();
    for (i64 j = 0; j < step; ++j) {
      baby.emplace(cur.code, j);
      cur = mul(cur, g);
    }
    const Elem giant = pow(g, -step);
    Elem y = x;
    for (i64 i = 0; i <= step; ++i) {
      if (auto it = baby.find(y.code); it != baby.end()) return mod(i * step + it->second, order_);
      y = mul(y, giant);
    }
    throw Error(Errc::NoSolution, "discrete log not found");
  }

  i64 p_ = 0;
  int m_ = 0;
  i64 q_ = 0;
  i64 order_ = 0;
  std::vector<i64> pw_;
  std::vector<i64> order_primes_;
  std::vector<i64> modulus_;
  std::vector<i64> trace_basis_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_exp_;
};

/// Context of degree m in {k, 2k, 4k} for the given family parameters.
inline FieldCtx build_context(const FieldParams& params, i64 m, BuildOptions opts = {}) {
  const auto checked = FieldParams::make(params.p, params.k);
  if (m != checked.k && m != 2 * checked.k && m != 4 * checked.k)
    throw Error(Errc::DegreeUnsupported, "degree " + std::to_string(m) + " not in {k, 2k, 4k}");
  return FieldCtx::with_degree(checked.p, static_cast<int>(m), opts);
}

}  // namespace charsum
