#pragma once

#include <algorithm>
#include <ostream>

#include "rowmotion/numeric.hpp"

namespace rowmotion {

// Tropical semifields over exact rationals. Written with the birational
// operator names so the toggle templates run unchanged: "+" is max (or min),
// "*" is addition, "/" is subtraction.

struct MaxPlus {
  Rational value;

  friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) { return {std::max(a.value, b.value)}; }
  friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) { return {a.value + b.value}; }
  friend MaxPlus operator/(const MaxPlus& a, const MaxPlus& b) { return {a.value - b.value}; }
  friend bool operator==(const MaxPlus& a, const MaxPlus& b) { return a.value == b.value; }
  friend std::ostream& operator<<(std::ostream& os, const MaxPlus& a) { return os << a.value; }
};

struct MinPlus {
  Rational value;

  friend MinPlus operator+(const MinPlus& a, const MinPlus& b) { return {std::min(a.value, b.value)}; }
  friend MinPlus operator*(const MinPlus& a, const MinPlus& b) { return {a.value + b.value}; }
  friend MinPlus operator/(const MinPlus& a, const MinPlus& b) { return {a.value - b.value}; }
  friend bool operator==(const MinPlus& a, const MinPlus& b) { return a.value == b.value; }
  friend std::ostream& operator<<(std::ostream& os, const MinPlus& a) { return os << a.value; }
};

inline MaxPlus inverse(const MaxPlus& a) { return {-a.value}; }
inline MinPlus inverse(const MinPlus& a) { return {-a.value}; }
inline MaxPlus one_like(const MaxPlus&) { return {Rational{0}}; }
inline MinPlus one_like(const MinPlus&) { return {Rational{0}}; }

}  // namespace rowmotion
