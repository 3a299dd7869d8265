#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "charsum/arith.hpp"

namespace charsum {

/// Exact element of Z[w], w a primitive p-th root of unity.
///
/// Stored in the basis {1, w, ..., w^(p-2)}; w^(p-1) is rewritten as
/// -(1 + w + ... + w^(p-2)). The basis is a Z-basis, so two values are equal
/// iff their coefficient vectors are equal.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(i64 p) : c_(static_cast<std::size_t>(p - 1), 0) {}

  static CycInt integer(i64 p, i64 value) {
    CycInt z(p);
    z.c_[0] = value;
    return z;
  }

  static CycInt omega_power(i64 p, i64 j) {
    std::vector<i64> full(static_cast<std::size_t>(p), 0);
    full[static_cast<std::size_t>(mod(j, p))] = 1;
    return from_full(full);
  }

  /// Sum of counts[j] * w^j for j in 0..p-1.
  static CycInt from_counts(std::span<const i64> counts) {
    return from_full(std::vector<i64>(counts.begin(), counts.end()));
  }

  /// Reduces a length-p vector of w^0..w^(p-1) coefficients.
  static CycInt from_full(const std::vector<i64>& full) {
    const auto p = static_cast<i64>(full.size());
    CycInt z(p);
    const i64 top = full.back();
    for (std::size_t j = 0; j + 1 < full.size(); ++j) z.c_[j] = checked_sub(full[j], top);
    return z;
  }

  [[nodiscard]] i64 prime() const noexcept { return static_cast<i64>(c_.size()) + 1; }
  [[nodiscard]] const std::vector<i64>& coeffs() const noexcept { return c_; }

  [[nodiscard]] bool is_rational_integer() const noexcept {
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_zero() const noexcept {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  /// The rational integer this value equals; throws NotRationalInteger otherwise.
  [[nodiscard]] i64 to_integer() const {
    if (!is_rational_integer()) throw Error(Errc::NotRationalInteger, to_string());
    return c_[0];
  }

  CycInt& operator+=(const CycInt& o) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_add(c_[j], o.c_[j]);
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = checked_sub(c_[j], o.c_[j]);
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  CycInt operator-() const { return scale(-1); }

  [[nodiscard]] CycInt scale(i64 s) const {
    CycInt z = *this;
    for (auto& v : z.c_) v = checked_mul(v, s);
    return z;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    const auto p = static_cast<std::size_t>(a.prime());
    std::vector<i64> full(p, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        full[(i + j) % p] = checked_add(full[(i + j) % p], checked_mul(a.c_[i], b.c_[j]));
    }
    return from_full(full);
  }

  /// w^j * z.
  [[nodiscard]] CycInt omega_shift(i64 j) const {
    const auto p = static_cast<std::size_t>(prime());
    const auto s = static_cast<std::size_t>(mod(j, prime()));
    std::vector<i64> full(p, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) full[(i + s) % p] = c_[i];
    return from_full(full);
  }

  /// Complex conjugation, w -> w^-1.
  [[nodiscard]] CycInt conj() const {
    const auto p = static_cast<std::size_t>(prime());
    std::vector<i64> full(p, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) full[(p - i) % p] = c_[i];
    return from_full(full);
  }

  /// z * conj(z), i.e. |z|^2 as an element of Z[w].
  [[nodiscard]] CycInt norm_squared() const { return *this * conj(); }

  /// |z|^2 as an integer; throws NotRationalInteger if the product is not one.
  [[nodiscard]] i64 norm_squared_integer() const { return norm_squared().to_integer(); }

  /// "[c0,c1,...,c_{p-2}]", the canonical rendering used as a map key.
  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(c_[j]);
    }
    return s + "]";
  }

  friend bool operator==(const CycInt&, const CycInt&) = default;
  friend auto operator<=>(const CycInt&, const CycInt&) = default;

 private:
  std::vector<i64> c_;
};

/// Accumulates w^e terms by residue and converts once at the end.
class OmegaCounter {
 public:
  explicit OmegaCounter(i64 p) : counts_(static_cast<std::size_t>(p), 0) {}

  void add(i64 exponent) { ++counts_[static_cast<std::size_t>(mod(exponent, prime()))]; }
  void add_residue(std::size_t r) { ++counts_[r]; }
  void merge(const OmegaCounter& o) {
    for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] = checked_add(counts_[j], o.counts_[j]);
  }

  [[nodiscard]] i64 prime() const noexcept { return static_cast<i64>(counts_.size()); }
  [[nodiscard]] const std::vector<i64>& counts() const noexcept { return counts_; }
  [[nodiscard]] CycInt value() const { return CycInt::from_counts(counts_); }

 private:
  std::vector<i64> counts_;
};

}  // namespace charsum
