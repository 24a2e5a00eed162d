#pragma once

#include <string>
#include <vector>

#include "rowmotion/catalog.hpp"

namespace rowmotion {

enum class Shape { G, H };

/// One connected component of the bipartite graph G^alpha.
///
/// Indices are hat-poset indices: `poset.top()` is 1^ and `poset.bottom()`
/// is 0^. For shape H the `z` list stays empty.
struct FileComponent {
  Shape shape = Shape::G;
  int m = 0;
  std::vector<int> x;  // black, bottom to top
  int u = -1;          // below x_1
  int v = -1;          // above x_m
  std::vector<int> y, z;

  std::string name() const { return (shape == Shape::G ? "G" : "H") + std::to_string(m); }
};

/// Components ordered by their lowest black vertex. Throws StructureError if
/// a component matches neither shape.
std::vector<FileComponent> file_decomposition(const MinusculePoset& mp, int alpha);

/// Sorted multiset of component names, e.g. "G1+G2".
std::string shape_signature(const std::vector<FileComponent>& comps);

}  // namespace rowmotion
