#pragma once

// Hasse diagrams with their colorings, transcribed vertex by vertex from the
// published pictures. Each vertex is (x, y, color) on the drawing grid with y
// increasing upward; the edges are exactly the diagonal neighbours
// (x +- 1, y + 1).

#include <vector>

#include "rowmotion/lie.hpp"

namespace fixtures {

struct FigureVertex {
  int x, y, color;
};

struct Figure {
  rowmotion::LieType lie;
  // rotate: 180 degree turn; flip: y reflected; formula: given separately
  enum class Involution { rotate, flip, formula } involution;
  std::vector<FigureVertex> vertices;
};

inline const std::vector<Figure>& figures() {
  using rowmotion::Family;
  static const std::vector<Figure> all = {
      {{Family::A, 7, 3},
       Figure::Involution::rotate,
       {{0, 2, 1}, {1, 1, 2}, {1, 3, 2}, {2, 0, 3}, {2, 2, 3}, {2, 4, 3}, {3, 1, 4}, {3, 3, 4},
        {3, 5, 4}, {4, 2, 5}, {4, 4, 5}, {4, 6, 5}, {5, 3, 6}, {5, 5, 6}, {6, 4, 7}}},
      {{Family::B, 4, 4},
       Figure::Involution::flip,
       {{0, 0, 4}, {0, 2, 4}, {0, 4, 4}, {0, 6, 4}, {1, 1, 3}, {1, 3, 3}, {1, 5, 3}, {2, 2, 2}, {2, 4, 2},
        {3, 3, 1}}},
      {{Family::C, 4, 1},
       Figure::Involution::flip,
       {{0, 0, 1}, {0, 6, 1}, {1, 1, 2}, {1, 5, 2}, {2, 2, 3}, {2, 4, 3}, {3, 3, 4}}},
      {{Family::D, 5, 1},
       Figure::Involution::formula,
       {{0, 0, 1}, {0, 6, 1}, {1, 1, 2}, {1, 3, 5}, {1, 5, 2}, {2, 2, 3}, {2, 4, 3}, {3, 3, 4}}},
      {{Family::D, 5, 5},
       Figure::Involution::flip,
       {{0, 0, 5}, {0, 2, 4}, {0, 4, 5}, {0, 6, 4}, {1, 1, 3}, {1, 3, 3}, {1, 5, 3}, {2, 2, 2}, {2, 4, 2},
        {3, 3, 1}}},
      {{Family::E, 6, 6},
       Figure::Involution::rotate,
       {{0, 4, 1}, {0, 10, 1}, {1, 3, 3}, {1, 5, 3}, {1, 7, 2}, {1, 9, 3}, {2, 2, 4}, {2, 4, 4}, {2, 6, 4},
        {2, 8, 4}, {3, 1, 5}, {3, 3, 2}, {3, 5, 5}, {3, 7, 5}, {4, 0, 6}, {4, 6, 6}}},
      {{Family::E, 7, 7},
       Figure::Involution::flip,
       {{0, 0, 7},  {0, 8, 7},  {0, 16, 7}, {1, 1, 6},  {1, 7, 6},  {1, 9, 6},  {1, 15, 6},
        {2, 2, 5},  {2, 4, 2},  {2, 6, 5},  {2, 8, 5},  {2, 10, 5}, {2, 12, 2}, {2, 14, 5},
        {3, 3, 4},  {3, 5, 4},  {3, 7, 4},  {3, 9, 4},  {3, 11, 4}, {3, 13, 4}, {4, 4, 3},
        {4, 6, 3},  {4, 8, 2},  {4, 10, 3}, {4, 12, 3}, {5, 5, 1},  {5, 11, 1}}},
  };
  return all;
}

}  // namespace fixtures
