#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rowmotion {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for division by zero and similar field errors.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Rational q{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Field helpers shared by the generic dynamics templates.
inline Rational one_like(const Rational&) { return Rational{1}; }
inline Rational inverse(const Rational& q) {
  if (q == 0) throw ArithmeticError("inverse of zero");
  return Rational{1} / q;
}
inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace rowmotion
