#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rowmotion {

/// A violated structural invariant (cyclic or redundant covers, bad index).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CoverPair = std::pair<int, int>;  // (lower, upper)

/// Finite poset on the dense index set 0..N-1, given by its cover relation.
///
/// The hat poset P^ = P + {1^, 0^} is addressed through the same object:
/// index `top()` == N is 1^ and `bottom()` == N+1 is 0^. The `hat_*` accessors
/// accept any index in 0..N+1.
///
/// Immutable after construction; safe to share across threads.
class Poset {
 public:
  Poset();
  Poset(int n_elements, std::vector<CoverPair> covers);

  /// Builds the poset whose order is the given strict relation, keeping only
  /// the covering pairs of its transitive reduction.
  static Poset from_strict_order(int n_elements,
                                 const std::function<bool(int, int)>& less);

  int size() const noexcept { return n_; }
  int hat_size() const noexcept { return n_ + 2; }
  int top() const noexcept { return n_; }
  int bottom() const noexcept { return n_ + 1; }

  const std::vector<CoverPair>& covers() const noexcept { return covers_; }
  std::span<const int> lower_covers(int v) const { return lower_.at(v); }
  std::span<const int> upper_covers(int v) const { return upper_.at(v); }
  std::span<const int> hat_lower_covers(int x) const { return hat_lower_.at(x); }
  std::span<const int> hat_upper_covers(int x) const { return hat_upper_.at(x); }

  /// Strict order a < b in P (not P^).
  bool less(int a, int b) const { return below_.at(b).at(a); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  bool is_cover(int lower, int upper) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Topological order of the cover DAG, ties broken by smallest index.
  const std::vector<int>& linear_extension() const noexcept { return linext_; }

 private:
  void build();

  int n_ = 0;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<std::vector<int>> hat_lower_, hat_upper_;
  std::vector<std::vector<bool>> below_;
  std::vector<int> linext_;
};

/// Order ideal stored as a bit-vector over elements.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(int universe) : bits_(static_cast<std::size_t>(universe), false) {}
  Ideal(int universe, std::initializer_list<int> members);

  int universe() const noexcept { return static_cast<int>(bits_.size()); }
  bool contains(int v) const { return bits_.at(static_cast<std::size_t>(v)); }
  void insert(int v) { bits_.at(static_cast<std::size_t>(v)) = true; }
  void erase(int v) { bits_.at(static_cast<std::size_t>(v)) = false; }
  int count() const;
  std::vector<int> members() const;
  const std::vector<bool>& bits() const noexcept { return bits_; }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend bool operator<(const Ideal& a, const Ideal& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<bool> bits_;
};

bool is_ideal(const Poset& p, const Ideal& members);

/// Down-closure of an arbitrary subset.
Ideal generated_ideal(const Poset& p, std::span<const int> generators);

std::vector<int> linear_extension(const Poset& p);

/// True iff `order` lists every element once and respects the order.
bool is_linear_extension(const Poset& p, std::span<const int> order);

/// Visits every order ideal exactly once, in lexicographic order of the
/// bit-vector (element 0 most significant, absent before present).
void for_each_ideal(const Poset& p, const std::function<void(const Ideal&)>& visit);
std::vector<Ideal> enumerate_ideals(const Poset& p);

struct RankFunction {
  std::vector<int> rank;  // 1-based
  int height = 0;
};

/// The rank function when `p` is graded, std::nullopt otherwise.
std::optional<RankFunction> rank_function(const Poset& p);

}  // namespace rowmotion

template <>
struct std::hash<rowmotion::Ideal> {
  std::size_t operator()(const rowmotion::Ideal& i) const noexcept {
    return std::hash<std::vector<bool>>{}(i.bits());
  }
};
