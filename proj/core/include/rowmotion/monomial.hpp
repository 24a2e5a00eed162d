#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace rowmotion {

inline constexpr int kMaxVars = 32;

/// Exponent vector packed four 16-bit fields per word, variable 0 in the
/// high bits of word 0, so comparing words in order is lexicographic.
class Monomial {
 public:
  static constexpr int kWords = kMaxVars / 4;

  Monomial() = default;

  static Monomial variable(int i, unsigned e = 1) {
    Monomial m;
    m.set_exponent(i, e);
    return m;
  }

  unsigned exponent(int i) const {
    return static_cast<unsigned>((w_[static_cast<std::size_t>(i >> 2)] >> shift(i)) & 0xFFFFu);
  }

  void set_exponent(int i, unsigned e) {
    check_var(i);
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent exceeds 65535");
    auto& w = w_[static_cast<std::size_t>(i >> 2)];
    deg_ = deg_ - exponent(i) + e;
    w = (w & ~(std::uint64_t{0xFFFF} << shift(i))) | (std::uint64_t{e} << shift(i));
  }

  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }
  const std::array<std::uint64_t, kWords>& words() const noexcept { return w_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint64_t carry = 0;
    for (int k = 0; k < kWords; ++k) {
      const auto x = a.w_[static_cast<std::size_t>(k)], y = b.w_[static_cast<std::size_t>(k)];
      const auto s = x + y;
      carry |= ((x & y) | ((x | y) & ~s)) & kHigh;
      r.w_[static_cast<std::size_t>(k)] = s;
    }
    if (carry) throw std::overflow_error("monomial exponent exceeds 65535");
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a / b when b divides a.
  friend std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
    if (b.deg_ > a.deg_) return std::nullopt;
    Monomial r;
    std::uint64_t borrow = 0;
    for (int k = 0; k < kWords; ++k) {
      const auto x = a.w_[static_cast<std::size_t>(k)], y = b.w_[static_cast<std::size_t>(k)];
      const auto d = x - y;
      borrow |= ((~x & y) | ((~x | y) & d)) & kHigh;
      r.w_[static_cast<std::size_t>(k)] = d;
    }
    if (borrow) return std::nullopt;
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend bool divides(const Monomial& b, const Monomial& a) { return divide(a, b).has_value(); }

  /// Componentwise minimum.
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = std::min(a.exponent(i), b.exponent(i));
      if (e) r.set_exponent(i, e);
    }
    return r;
  }

  /// Keeps only the exponents whose variable bit is set in `mask`.
  Monomial restrict_to(std::uint32_t mask) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      if ((mask >> i) & 1u) {
        unsigned e = exponent(i);
        if (e) r.set_exponent(i, e);
      }
    return r;
  }

  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i)) s |= 1u << i;
    return s;
  }

  /// Graded lexicographic comparison: -1, 0 or 1.
  friend int compare(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    for (int k = 0; k < kWords; ++k) {
      const auto x = a.w_[static_cast<std::size_t>(k)], y = b.w_[static_cast<std::size_t>(k)];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg_ == b.deg_ && a.w_ == b.w_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  static constexpr std::uint64_t kHigh = 0x8000800080008000ULL;
  static int shift(int i) { return 48 - 16 * (i & 3); }
  static void check_var(int i) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  }

  std::array<std::uint64_t, kWords> w_{};
  unsigned deg_ = 0;
};

}  // namespace rowmotion
