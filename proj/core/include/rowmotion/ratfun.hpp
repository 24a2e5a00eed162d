#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rowmotion/polynomial.hpp"

namespace rowmotion {

/// Element of Q(x_0, ..., x_31), stored as a fully reduced fraction of
/// integer polynomials whose denominator has positive leading coefficient.
/// Two equal functions therefore have identical representations.
class RatFun {
 public:
  RatFun() : den_(1L) {}
  RatFun(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFun(MultiPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)

  static RatFun variable(int i) { return RatFun(MultiPoly::variable(i)); }
  /// Reduces n/d; throws ArithmeticError if d is zero.
  static RatFun fraction(MultiPoly n, MultiPoly d);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Single-term numerator and denominator.
  bool is_laurent_monomial() const { return num_.is_term() && den_.is_term(); }
  std::size_t term_count() const { return num_.size() + den_.size(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun pow(int e) const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Throws ArithmeticError when the denominator vanishes at `point`.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const VarTable* vars = nullptr) const;

 private:
  RatFun(MultiPoly n, MultiPoly d, bool /*reduced*/) : num_(std::move(n)), den_(std::move(d)) {}

  MultiPoly num_;
  MultiPoly den_;
};

RatFun inverse(const RatFun& f);
inline RatFun one_like(const RatFun&) { return RatFun(1L); }

/// Composition: every variable i of f is replaced by sigma[i]. sigma must
/// cover every variable that occurs in f.
RatFun substitute(const RatFun& f, std::span<const RatFun> sigma);

struct EqualityMode {
  bool exact = true;
  std::uint64_t seed = 1;
  int trials = 20;
};

/// Exact mode compares canonical forms. Probabilistic mode evaluates both
/// sides at `trials` random points with coordinates in 1..2^31, skipping
/// points where a denominator vanishes.
bool ratfun_equal(const RatFun& f, const RatFun& g, const EqualityMode& mode);

/// Random point with coordinates uniform in 1..2^31 for `nvars` variables.
std::vector<Rational> random_point(std::uint64_t& state, int nvars);

/// Tropical evaluation of a subtraction-free function: "+" becomes max (or
/// min), "*" becomes +. Throws if a coefficient is not positive.
Rational tropicalize(const RatFun& f, std::span<const Rational> point, bool use_max);

}  // namespace rowmotion
