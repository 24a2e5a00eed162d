#pragma once

#include <utility>
#include <vector>

#include "rowmotion/lie.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

using Coord = std::pair<int, int>;

/// A minuscule poset with its coloring by simple roots and the canonical
/// involutive anti-automorphism.
///
/// Elements are numbered in lexicographic order of their coordinates, which
/// is a linear extension since the order is componentwise.
struct MinusculePoset {
  LieType lie;
  Poset poset;
  std::vector<Coord> coord;
  std::vector<int> color;       // 1..n
  std::vector<int> involution;
  std::vector<int> rank;        // 1..h-1
  int coxeter_number = 0;
  CartanData cartan{Family::A, 1};
  std::vector<std::vector<int>> files;  // files[alpha-1], bottom to top

  int size() const noexcept { return poset.size(); }
  const std::vector<int>& file(int alpha) const { return files.at(static_cast<std::size_t>(alpha - 1)); }
  int minimum() const;
  int maximum() const;
  int element_at(Coord c) const;  // -1 when absent
};

/// Throws CatalogError for non-minuscule input and StructureError if the
/// constructed data violates any of the checked invariants.
MinusculePoset build_minuscule(const LieType& lie);

int involution_of(const MinusculePoset& mp, int v);

/// Re-checks all structural invariants. Returns an empty string when they
/// hold, otherwise a description of the first failure.
std::string check_invariants(const MinusculePoset& mp);

/// Picture position used for export and figure fixtures: column j-i, row i+j.
Coord rc_position(Coord c);

}  // namespace rowmotion
