#pragma once

#include <span>
#include <vector>

#include "rowmotion/catalog.hpp"
#include "rowmotion/numeric.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

/// Adds or removes v when the result is still an ideal, otherwise returns I.
Ideal toggle(const Poset& p, const Ideal& I, int v);

/// Ideal generated by the minimal elements of the complement.
Ideal rowmotion(const Poset& p, const Ideal& I);

/// Toggles composed along `order` with the last entry applied first, i.e.
/// top to bottom when `order` is a linear extension.
Ideal rowmotion_by_toggles(const Poset& p, const Ideal& I, std::span<const int> order);

struct Orbit {
  Ideal representative;  // lexicographically smallest member
  std::vector<Ideal> members;  // starting at the representative
};

std::vector<Orbit> rowmotion_orbits(const Poset& p);

struct OrbitStats {
  int ideal_count = 0;
  int order = 0;  // lcm of orbit lengths
  int empty_orbit_length = 0;
  std::vector<Orbit> orbits;
  // file_average[o][alpha-1] = orbit mean of #(I cap P^alpha)
  std::vector<std::vector<Rational>> file_average;
};

OrbitStats orbit_stats(const MinusculePoset& mp);

}  // namespace rowmotion
