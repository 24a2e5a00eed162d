#include "rowmotion/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace rowmotion {

Poset::Poset() { build(); }

Poset::Poset(int n_elements, std::vector<CoverPair> covers)
    : n_(n_elements), covers_(std::move(covers)) {
  if (n_ < 0) throw StructureError("negative element count");
  build();
}

Poset Poset::from_strict_order(int n_elements,
                               const std::function<bool(int, int)>& less) {
  std::vector<CoverPair> covers;
  for (int a = 0; a < n_elements; ++a) {
    for (int b = 0; b < n_elements; ++b) {
      if (a == b || !less(a, b)) continue;
      bool is_cover = true;
      for (int c = 0; c < n_elements && is_cover; ++c) {
        if (c != a && c != b && less(a, c) && less(c, b)) is_cover = false;
      }
      if (is_cover) covers.emplace_back(a, b);
    }
  }
  return Poset(n_elements, std::move(covers));
}

void Poset::build() {
  const auto n = static_cast<std::size_t>(n_);
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw StructureError("duplicate cover pair");

  lower_.assign(n, {});
  upper_.assign(n, {});
  for (const auto& [lo, hi] : covers_) {
    if (lo < 0 || hi < 0 || lo >= n_ || hi >= n_)
      throw StructureError("cover index out of range");
    if (lo == hi) throw StructureError("element covers itself");
    upper_[static_cast<std::size_t>(lo)].push_back(hi);
    lower_[static_cast<std::size_t>(hi)].push_back(lo);
  }

  // Kahn's algorithm, smallest ready index first.
  std::vector<int> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = static_cast<int>(lower_[v].size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n_; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  linext_.clear();
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    linext_.push_back(v);
    for (int w : upper_[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (linext_.size() != n) throw StructureError("cover relation contains a cycle");

  below_.assign(n, std::vector<bool>(n, false));
  for (int v : linext_) {
    auto& row = below_[static_cast<std::size_t>(v)];
    for (int w : lower_[static_cast<std::size_t>(v)]) {
      row[static_cast<std::size_t>(w)] = true;
      const auto& sub = below_[static_cast<std::size_t>(w)];
      for (std::size_t u = 0; u < n; ++u)
        if (sub[u]) row[u] = true;
    }
  }
  for (const auto& [lo, hi] : covers_) {
    for (int w : lower_[static_cast<std::size_t>(hi)]) {
      if (w != lo && below_[static_cast<std::size_t>(w)][static_cast<std::size_t>(lo)])
        throw StructureError("redundant cover (" + std::to_string(lo) + ", " +
                             std::to_string(hi) + ")");
    }
  }

  hat_lower_.assign(n + 2, {});
  hat_upper_.assign(n + 2, {});
  for (int v = 0; v < n_; ++v) {
    const auto sv = static_cast<std::size_t>(v);
    hat_lower_[sv] = lower_[sv];
    hat_upper_[sv] = upper_[sv];
    if (lower_[sv].empty()) {
      hat_lower_[sv].push_back(bottom());
      hat_upper_[static_cast<std::size_t>(bottom())].push_back(v);
    }
    if (upper_[sv].empty()) {
      hat_upper_[sv].push_back(top());
      hat_lower_[static_cast<std::size_t>(top())].push_back(v);
    }
  }
  if (n_ == 0) {
    hat_lower_[static_cast<std::size_t>(top())].push_back(bottom());
    hat_upper_[static_cast<std::size_t>(bottom())].push_back(top());
  }
}

bool Poset::is_cover(int lower, int upper) const {
  const auto& up = upper_.at(static_cast<std::size_t>(lower));
  return std::find(up.begin(), up.end(), upper) != up.end();
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (lower_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (upper_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
  return out;
}

Ideal::Ideal(int universe, std::initializer_list<int> members) : Ideal(universe) {
  for (int v : members) insert(v);
}

int Ideal::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> Ideal::members() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(static_cast<int>(v));
  return out;
}

bool is_ideal(const Poset& p, const Ideal& members) {
  if (members.universe() != p.size()) return false;
  for (const auto& [lo, hi] : p.covers())
    if (members.contains(hi) && !members.contains(lo)) return false;
  return true;
}

Ideal generated_ideal(const Poset& p, std::span<const int> generators) {
  Ideal out(p.size());
  std::vector<int> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (out.contains(v)) continue;
    out.insert(v);
    for (int w : p.lower_covers(v)) stack.push_back(w);
  }
  return out;
}

std::vector<int> linear_extension(const Poset& p) { return p.linear_extension(); }

bool is_linear_extension(const Poset& p, std::span<const int> order) {
  if (static_cast<int>(order.size()) != p.size()) return false;
  std::vector<int> position(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= p.size() || position[static_cast<std::size_t>(v)] != -1) return false;
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (const auto& [lo, hi] : p.covers())
    if (position[static_cast<std::size_t>(lo)] > position[static_cast<std::size_t>(hi)])
      return false;
  return true;
}

namespace {

struct IdealWalker {
  const Poset& p;
  const std::function<void(const Ideal&)>& visit;
  Ideal in;
  std::vector<bool> out;

  void walk(int v) {
    if (v == p.size()) {
      visit(in);
      return;
    }
    bool can_exclude = true;
    for (int w = 0; w < v && can_exclude; ++w)
      if (in.contains(w) && p.less(v, w)) can_exclude = false;
    if (can_exclude) {
      out[static_cast<std::size_t>(v)] = true;
      walk(v + 1);
      out[static_cast<std::size_t>(v)] = false;
    }
    bool can_include = true;
    for (int w = 0; w < v && can_include; ++w)
      if (out[static_cast<std::size_t>(w)] && p.less(w, v)) can_include = false;
    if (can_include) {
      in.insert(v);
      walk(v + 1);
      in.erase(v);
    }
  }
};

}  // namespace

void for_each_ideal(const Poset& p, const std::function<void(const Ideal&)>& visit) {
  IdealWalker walker{p, visit, Ideal(p.size()),
                     std::vector<bool>(static_cast<std::size_t>(p.size()), false)};
  walker.walk(0);
}

std::vector<Ideal> enumerate_ideals(const Poset& p) {
  std::vector<Ideal> out;
  for_each_ideal(p, [&](const Ideal& i) { out.push_back(i); });
  return out;
}

std::optional<RankFunction> rank_function(const Poset& p) {
  RankFunction rf;
  rf.rank.assign(static_cast<std::size_t>(p.size()), 0);
  for (int v : p.linear_extension()) {
    int r = 1;
    for (int w : p.lower_covers(v)) r = std::max(r, rf.rank[static_cast<std::size_t>(w)] + 1);
    rf.rank[static_cast<std::size_t>(v)] = r;
  }
  for (const auto& [lo, hi] : p.covers())
    if (rf.rank[static_cast<std::size_t>(hi)] != rf.rank[static_cast<std::size_t>(lo)] + 1)
      return std::nullopt;
  std::set<int> top_ranks;
  for (int v : p.maximal_elements()) top_ranks.insert(rf.rank[static_cast<std::size_t>(v)]);
  if (top_ranks.size() > 1) return std::nullopt;
  rf.height = top_ranks.empty() ? 0 : *top_ranks.begin();
  return rf;
}

}  // namespace rowmotion
