#include "rowmotion/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rowmotion {

namespace {

struct Cell {
  Coord at;
  int color;
};

// Transcribed from the E6 and E7 Hasse diagrams, (i,j) -> color.
const std::vector<Cell> kE6 = {
    {{1, 1}, 6}, {{2, 1}, 5}, {{3, 1}, 4}, {{4, 1}, 3}, {{5, 1}, 1}, {{3, 2}, 2},
    {{4, 2}, 4}, {{5, 2}, 3}, {{4, 3}, 5}, {{5, 3}, 4}, {{6, 3}, 2}, {{4, 4}, 6},
    {{5, 4}, 5}, {{6, 4}, 4}, {{7, 4}, 3}, {{8, 4}, 1},
};

const std::vector<Cell> kE7 = {
    {{1, 1}, 7}, {{1, 2}, 6}, {{1, 3}, 5}, {{1, 4}, 4}, {{1, 5}, 3}, {{1, 6}, 1},
    {{2, 4}, 2}, {{2, 5}, 4}, {{2, 6}, 3}, {{3, 5}, 5}, {{3, 6}, 4}, {{3, 7}, 2},
    {{4, 5}, 6}, {{4, 6}, 5}, {{4, 7}, 4}, {{5, 5}, 7}, {{5, 6}, 6}, {{5, 7}, 5},
    {{4, 8}, 3}, {{4, 9}, 1}, {{5, 8}, 4}, {{5, 9}, 3}, {{6, 8}, 2}, {{6, 9}, 4},
    {{7, 9}, 5}, {{8, 9}, 6}, {{9, 9}, 7},
};

// Shifted staircase 0 <= i <= j <= m-1.
std::vector<Cell> staircase(int m, const std::function<int(int, int)>& color) {
  std::vector<Cell> out;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) out.push_back({{i, j}, color(i, j)});
  return out;
}

std::vector<Cell> cells_for(const LieType& lie) {
  const int n = lie.n, r = lie.weight;
  std::vector<Cell> out;
  switch (lie.family) {
    case Family::A:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j <= n - r; ++j) out.push_back({{i, j}, r - i + j});
      return out;
    case Family::B:
      return staircase(n, [n](int i, int j) { return n - (j - i); });
    case Family::C:
      for (int k = 1; k <= n; ++k) out.push_back({{1, k}, k});
      for (int k = 2; k <= n; ++k) out.push_back({{k, n}, n + 1 - k});
      return out;
    case Family::D:
      if (r == 1) {
        for (int k = 1; k <= n - 1; ++k) out.push_back({{1, k}, k});
        out.push_back({{2, n - 2}, n});
        for (int k = 2; k <= n - 1; ++k) out.push_back({{k, n - 1}, n - k});
        return out;
      } else {
        const bool swap = (r == n - 1);
        return staircase(n - 1, [n, swap](int i, int j) {
          int d = j - i;
          int c = d >= 1 ? n - 1 - d : (i % 2 == 0 ? n : n - 1);
          if (swap && c >= n - 1) c = (c == n) ? n - 1 : n;
          return c;
        });
      }
    case Family::E:
      out = lie.n == 6 ? kE6 : kE7;
      if (lie.n == 6 && r == 1) {
        for (auto& c : out) {
          static const int sigma[] = {0, 6, 2, 5, 4, 3, 1};
          c.color = sigma[c.color];
        }
      }
      return out;
  }
  return out;
}

enum class Mirror { Rotate, Flip, Diamond };

Mirror mirror_for(const LieType& lie) {
  switch (lie.family) {
    case Family::A: return Mirror::Rotate;
    case Family::D: return lie.weight == 1 ? Mirror::Diamond : Mirror::Flip;
    case Family::E: return lie.n == 6 ? Mirror::Rotate : Mirror::Flip;
    default: return Mirror::Flip;
  }
}

std::vector<int> compute_involution(const MinusculePoset& mp, Mirror mirror) {
  const int N = mp.size();
  std::vector<int> iota(static_cast<std::size_t>(N), -1);
  if (N == 0) return iota;
  int cmin = 1 << 30, cmax = -(1 << 30), rmin = cmin, rmax = cmax;
  for (const auto& c : mp.coord) {
    auto [col, row] = rc_position(c);
    cmin = std::min(cmin, col);
    cmax = std::max(cmax, col);
    rmin = std::min(rmin, row);
    rmax = std::max(rmax, row);
  }
  for (int v = 0; v < N; ++v) {
    auto [col, row] = rc_position(mp.coord[static_cast<std::size_t>(v)]);
    int ncol = mirror == Mirror::Rotate ? cmin + cmax - col : col;
    int nrow = rmin + rmax - row;
    int w = mp.element_at({(nrow - ncol) / 2, (nrow + ncol) / 2});
    if ((nrow - ncol) % 2 != 0) w = -1;
    iota[static_cast<std::size_t>(v)] = w;
  }
  if (mirror == Mirror::Diamond && mp.lie.n % 2 == 1) {
    // e1 + e_n and e1 - e_n trade places when n is odd.
    const int n = mp.lie.n;
    int plus = mp.element_at({2, n - 2}), minus = mp.element_at({1, n - 1});
    iota[static_cast<std::size_t>(plus)] = minus;
    iota[static_cast<std::size_t>(minus)] = plus;
  }
  for (int w : iota)
    if (w < 0) throw StructureError("mirror image of the Hasse diagram leaves the poset");
  return iota;
}

}  // namespace

Coord rc_position(Coord c) { return {c.second - c.first, c.first + c.second}; }

int MinusculePoset::minimum() const {
  auto m = poset.minimal_elements();
  return m.size() == 1 ? m[0] : -1;
}

int MinusculePoset::maximum() const {
  auto m = poset.maximal_elements();
  return m.size() == 1 ? m[0] : -1;
}

int MinusculePoset::element_at(Coord c) const {
  auto it = std::lower_bound(coord.begin(), coord.end(), c);
  if (it == coord.end() || *it != c) return -1;
  return static_cast<int>(it - coord.begin());
}

MinusculePoset build_minuscule(const LieType& lie) {
  require_legal(lie);
  auto cells = cells_for(lie);
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.at < b.at; });

  MinusculePoset mp;
  mp.lie = lie;
  mp.coxeter_number = coxeter_number(lie);
  mp.cartan = CartanData(lie.family, lie.n);
  for (const auto& c : cells) {
    mp.coord.push_back(c.at);
    mp.color.push_back(c.color);
  }
  const auto& coord = mp.coord;
  mp.poset = Poset::from_strict_order(static_cast<int>(coord.size()), [&](int a, int b) {
    const auto& ca = coord[static_cast<std::size_t>(a)];
    const auto& cb = coord[static_cast<std::size_t>(b)];
    return ca != cb && ca.first <= cb.first && ca.second <= cb.second;
  });
  auto rf = rank_function(mp.poset);
  if (!rf) throw StructureError(to_string(lie) + ": poset is not graded");
  mp.rank = rf->rank;

  mp.files.assign(static_cast<std::size_t>(lie.n), {});
  for (int v : mp.poset.linear_extension()) {
    int c = mp.color[static_cast<std::size_t>(v)];
    if (c < 1 || c > lie.n) throw StructureError("color out of range");
    mp.files[static_cast<std::size_t>(c - 1)].push_back(v);
  }
  for (auto& f : mp.files)
    std::stable_sort(f.begin(), f.end(), [&](int a, int b) {
      return mp.rank[static_cast<std::size_t>(a)] < mp.rank[static_cast<std::size_t>(b)];
    });

  mp.involution = compute_involution(mp, mirror_for(lie));
  if (auto err = check_invariants(mp); !err.empty())
    throw StructureError(to_string(lie) + ": " + err);
  return mp;
}

int involution_of(const MinusculePoset& mp, int v) {
  return mp.involution.at(static_cast<std::size_t>(v));
}

std::string check_invariants(const MinusculePoset& mp) {
  const auto& p = mp.poset;
  const auto& cd = mp.cartan;
  const int N = p.size();
  auto at = [](const std::vector<int>& xs, int i) { return xs[static_cast<std::size_t>(i)]; };

  for (const auto& [lo, hi] : p.covers())
    if (!cd.adjacent(at(mp.color, lo), at(mp.color, hi)))
      return "cover " + std::to_string(lo) + "<" + std::to_string(hi) + " joins non-adjacent colors";

  for (int alpha = 1; alpha <= cd.rank(); ++alpha) {
    const auto& f = mp.file(alpha);
    if (f.empty()) return "file " + std::to_string(alpha) + " is empty";
    for (std::size_t k = 1; k < f.size(); ++k) {
      if (!p.less(f[k - 1], f[k])) return "file " + std::to_string(alpha) + " is not a chain";
      if ((at(mp.rank, f[k]) - at(mp.rank, f[k - 1])) % 2 != 0)
        return "file " + std::to_string(alpha) + " has an odd rank gap";
    }
  }

  auto rf = rank_function(p);
  if (!rf || rf->height != mp.coxeter_number - 1) return "height is not h-1";

  int lo = mp.minimum(), hi = mp.maximum();
  if (lo < 0 || hi < 0) return "minimum or maximum is not unique";
  if (at(mp.color, lo) != mp.lie.weight) return "minimum is not colored by the weight";
  if (at(mp.color, hi) != cd.minus_w0(mp.lie.weight)) return "maximum color is not -w0 of the weight";

  if (static_cast<int>(mp.involution.size()) != N) return "involution has wrong length";
  for (int v = 0; v < N; ++v) {
    int w = at(mp.involution, v);
    if (w < 0 || w >= N || at(mp.involution, w) != v) return "involution is not involutive";
    if (at(mp.color, w) != cd.minus_w0(at(mp.color, v))) return "involution does not map files by -w0";
  }
  for (const auto& [a, b] : p.covers())
    if (!p.is_cover(at(mp.involution, b), at(mp.involution, a)))
      return "involution is not order-reversing";
  return {};
}

}  // namespace rowmotion
