#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rowmotion/monomial.hpp"
#include "rowmotion/numeric.hpp"

namespace rowmotion {

/// Variable names, fixed for the lifetime of a computation.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names);

  int add(const std::string& name);
  int index(const std::string& name) const;  // throws if unknown
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> lookup_;
};

struct Term {
  Monomial mono;
  Integer coef;
};

/// Sparse polynomial over Z. Terms are kept in strictly decreasing graded
/// lexicographic order with nonzero coefficients, so equal polynomials have
/// identical term vectors.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(Integer c);
  MultiPoly(Integer c, Monomial m);

  static MultiPoly variable(int i, unsigned e = 1) { return MultiPoly(Integer{1}, Monomial::variable(i, e)); }
  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_term() const noexcept { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }
  Integer constant_value() const;  // requires is_constant()

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  unsigned degree(int var) const;
  std::uint32_t support() const;

  /// Componentwise minimum of all exponents.
  Monomial monomial_content() const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  Integer integer_content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly mul_term(const Integer& c, const Monomial& m) const;
  /// Exact division by an integer and a monomial; both must divide every term.
  MultiPoly div_term(const Integer& c, const Monomial& m) const;
  MultiPoly pow(unsigned e) const;

  /// Coefficients as a polynomial in `var`, indexed by the exponent of var.
  /// The returned polynomials do not involve `var`.
  std::map<unsigned, MultiPoly> coefficients_in(int var) const;
  /// Same, for a set of variables given as a bit mask.
  std::map<Monomial, MultiPoly> coefficients_in_set(std::uint32_t mask) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Partial evaluation of the variables in `mask` at integer values.
  MultiPoly evaluate_partial(std::uint32_t mask, std::span<const Integer> values) const;

  std::string to_string(const VarTable* vars = nullptr) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<Term> terms_;
};

/// a / b when the division is exact, std::nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor with positive leading coefficient (gcd(0,0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Counters for the gcd pipeline, for benchmarks and tests.
struct GcdStats {
  std::uint64_t calls = 0;
  std::uint64_t trivial = 0;
  std::uint64_t probe_coprime = 0;
  std::uint64_t evaluation_lift = 0;
  std::uint64_t divisor_hit = 0;
  std::uint64_t prs_fallback = 0;
};
GcdStats& gcd_stats();

}  // namespace rowmotion
