#include "rowmotion/files.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rowmotion {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> sorted(std::span<const int> s) {
  std::vector<int> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FileComponent> file_decomposition(const MinusculePoset& mp, int alpha) {
  if (alpha < 1 || alpha > mp.lie.n) throw CatalogError("simple root index out of range");
  const auto& p = mp.poset;
  const auto& blacks = mp.file(alpha);
  auto is_black = [&](int x) {
    return x < p.size() && mp.color[static_cast<std::size_t>(x)] == alpha;
  };
  auto black_nbrs = [&](int w) {
    std::set<int> out;
    for (int x : p.hat_lower_covers(w))
      if (is_black(x)) out.insert(x);
    for (int x : p.hat_upper_covers(w))
      if (is_black(x)) out.insert(x);
    return out;
  };

  Dsu dsu(p.hat_size());
  for (int x : blacks) {
    for (int w : p.hat_lower_covers(x)) dsu.unite(x, w);
    for (int w : p.hat_upper_covers(x)) dsu.unite(x, w);
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> root_of;
  for (int x : blacks) {  // blacks are in rank order, so groups are too
    int r = dsu.find(x);
    auto it = std::find(root_of.begin(), root_of.end(), r);
    if (it == root_of.end()) {
      root_of.push_back(r);
      groups.push_back({x});
    } else {
      groups[static_cast<std::size_t>(it - root_of.begin())].push_back(x);
    }
  }

  auto fail = [&](const std::string& why) {
    throw StructureError(to_string(mp.lie) + " alpha_" + std::to_string(alpha) + ": " + why);
  };

  std::vector<FileComponent> out;
  for (const auto& xs : groups) {
    FileComponent c;
    c.x = xs;
    c.m = static_cast<int>(xs.size());
    auto below = sorted(p.hat_lower_covers(xs.front()));
    auto above = sorted(p.hat_upper_covers(xs.back()));
    if (below.size() != 1 || black_nbrs(below[0]) != std::set<int>{xs.front()})
      fail("bottom of component is not a single pendant vertex");
    if (above.size() != 1 || black_nbrs(above[0]) != std::set<int>{xs.back()})
      fail("top of component is not a single pendant vertex");
    c.u = below[0];
    c.v = above[0];
    int gap_size = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      auto up = sorted(p.hat_upper_covers(xs[i]));
      auto down = sorted(p.hat_lower_covers(xs[i + 1]));
      if (up != down) fail("whites between consecutive black vertices do not match");
      for (int w : up)
        if (black_nbrs(w) != std::set<int>{xs[i], xs[i + 1]}) fail("white vertex has extra black neighbors");
      int g = static_cast<int>(up.size());
      if (g != 1 && g != 2) fail("gap of unexpected width");
      if (gap_size != 0 && g != gap_size) fail("mixed gap widths");
      gap_size = g;
      c.y.push_back(up[0]);
      if (g == 2) c.z.push_back(up[1]);
    }
    c.shape = gap_size == 1 ? Shape::H : Shape::G;
    out.push_back(std::move(c));
  }
  return out;
}

std::string shape_signature(const std::vector<FileComponent>& comps) {
  std::vector<std::string> names;
  for (const auto& c : comps) names.push_back(c.name());
  std::sort(names.begin(), names.end());
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : "+") + n;
  return s;
}

}  // namespace rowmotion
