#include "rowmotion/oracles.hpp"

#include <algorithm>

#include "rowmotion/files.hpp"
#include "rowmotion/sampling.hpp"

namespace rowmotion {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_diamond(const MinusculePoset& mp) {
  if (mp.lie.family != Family::D || mp.lie.weight != 1)
    throw std::invalid_argument("double-tailed diamond oracle needs D_n w1, got " + to_string(mp.lie));
}

template <class T>
T constant(const T& like, long num, long den);

template <>
Rational constant(const Rational&, long num, long den) {
  return make_rational(num, den);
}

template <>
RatFun constant(const RatFun&, long num, long den) {
  return RatFun::fraction(MultiPoly(num), MultiPoly(den));
}

GridPoset grid(std::vector<Coord> cells) {
  std::sort(cells.begin(), cells.end());
  GridPoset g;
  g.coord = cells;
  g.poset = Poset::from_strict_order(static_cast<int>(cells.size()), [&](int a, int b) {
    return a != b && cells[at(a)].first <= cells[at(b)].first && cells[at(a)].second <= cells[at(b)].second;
  });
  return g;
}

}  // namespace

int GridPoset::index(int i, int j) const {
  auto it = std::lower_bound(coord.begin(), coord.end(), Coord{i, j});
  return it != coord.end() && *it == Coord{i, j} ? static_cast<int>(it - coord.begin()) : -1;
}

GridPoset shifted_staircase(int r) {
  std::vector<Coord> cells;
  for (int i = 0; i <= r; ++i)
    for (int j = i; j <= r; ++j) cells.emplace_back(i, j);
  return grid(std::move(cells));
}

GridPoset rectangle(int rows, int cols) {
  std::vector<Coord> cells;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) cells.emplace_back(i, j);
  return grid(std::move(cells));
}

int diamond_element(const MinusculePoset& mp, int i) {
  require_diamond(mp);
  const int n = mp.lie.n;
  if (i < 1 || i > 2 * n - 3 || i == n - 1) throw std::out_of_range("no diamond element v_" + std::to_string(i));
  return i <= n - 2 ? mp.element_at({n - i, n - 1}) : mp.element_at({1, 2 * n - 2 - i});
}

int diamond_middle(const MinusculePoset& mp, int sign) {
  require_diamond(mp);
  const int n = mp.lie.n;
  return sign > 0 ? mp.element_at({2, n - 2}) : mp.element_at({1, n - 1});
}

std::string diamond_label(const MinusculePoset& mp, int v) {
  const int n = mp.lie.n;
  if (v == diamond_middle(mp, 1)) return "v+";
  if (v == diamond_middle(mp, -1)) return "v-";
  for (int i = 1; i <= 2 * n - 3; ++i)
    if (i != n - 1 && diamond_element(mp, i) == v) return "v" + std::to_string(i);
  throw std::out_of_range("element outside the diamond");
}

RatFun diamond_monomial(const MinusculePoset& mp, int i, int l, int sign) {
  require_diamond(mp);
  const int n = mp.lie.n, last = i + l - 1;
  bool defined;
  if (sign == 0)
    defined = l >= 1 && ((i >= 1 && last <= n - 2) || (i >= n && last <= 2 * n - 3));
  else
    defined = l >= 1 && i >= 1 && i <= n - 1 && last >= n - 1 && last <= 2 * n - 3;
  if (!defined)
    throw std::out_of_range("C" + std::string(sign > 0 ? "+" : sign < 0 ? "-" : "") + "(" + std::to_string(i) + ";" +
                            std::to_string(l) + ") is not defined");
  MultiPoly m(1L);
  for (int j = i; j <= last; ++j)
    m = m * MultiPoly::variable(j == n - 1 ? diamond_middle(mp, sign) : diamond_element(mp, j));
  return RatFun(std::move(m));
}

RatFun diamond_initial(const MinusculePoset& mp, int v) {
  require_diamond(mp);
  const int n = mp.lie.n;
  for (int s : {1, -1})
    if (v == diamond_middle(mp, s)) return diamond_monomial(mp, n - 1, n - 1, s);
  for (int i = 1; i <= 2 * n - 3; ++i) {
    if (i == n - 1 || diamond_element(mp, i) != v) continue;
    if (i <= n - 2) return diamond_monomial(mp, i, 2 * n - i - 2, 1) + diamond_monomial(mp, i, 2 * n - i - 2, -1);
    return diamond_monomial(mp, i, 2 * n - i - 2, 0);
  }
  throw std::out_of_range("element outside the diamond");
}

RatFun diamond_oracle(const MinusculePoset& mp, int k, int v) {
  require_diamond(mp);
  const int n = mp.lie.n;
  if (v < 0 || v >= mp.size()) throw std::out_of_range("element outside the diamond");
  if (k < 1 || k > mp.rank[at(v)])
    throw std::out_of_range("iterate " + std::to_string(k) + " outside 1..rank(" + diamond_label(mp, v) + ")");
  const RatFun one(1L);
  for (int s : {1, -1})
    if (v == diamond_middle(mp, s)) return one / diamond_monomial(mp, k, n - 1, (k % 2 == 1) ? s : -s);
  for (int i = 1; i <= 2 * n - 3; ++i) {
    if (i == n - 1 || diamond_element(mp, i) != v) continue;
    if (i >= n) return one / (diamond_monomial(mp, k, i, 1) + diamond_monomial(mp, k, i, -1));
    if (k <= n - i - 1 || k >= n) return one / diamond_monomial(mp, k, i, 0);
    return one / diamond_monomial(mp, k, i, 1) + one / diamond_monomial(mp, k, i, -1);
  }
  throw std::out_of_range("element outside the diamond");
}

OracleReport diamond_check(const MinusculePoset& mp) {
  require_diamond(mp);
  OracleReport rep;
  const Poset& p = mp.poset;
  Labeling<RatFun> F = symbolic_labeling_z(p);
  F[at(p.top())] = RatFun(1L);
  F[at(p.bottom())] = RatFun(1L);
  const auto traj = trajectory(F, mp.coxeter_number - 1, [&](const Labeling<RatFun>& G) { return browmotion(p, G); });
  for (int v = 0; v < p.size(); ++v) {
    ++rep.checked;
    if (!(diamond_initial(mp, v) == F[at(v)])) rep.fail("X(" + diamond_label(mp, v) + ") differs from its C-expansion");
    for (int k = 1; k <= mp.rank[at(v)]; ++k) {
      ++rep.checked;
      if (!(diamond_oracle(mp, k, v) == traj[at(k)][at(v)]))
        rep.fail("(rho^" + std::to_string(k) + " X)(" + diamond_label(mp, v) + ") = " + traj[at(k)][at(v)].to_string() +
                 " differs from the closed form " + diamond_oracle(mp, k, v).to_string());
    }
  }
  return rep;
}

OracleReport doubling_check(int r, const EqualityMode& mode) {
  if (r < 0) throw std::invalid_argument("staircase parameter must be nonnegative");
  OracleReport rep;
  const GridPoset st = shifted_staircase(r), rect = rectangle(r + 1, r + 1);
  auto run = [&](const auto& F, const std::string& point) {
    using T = std::decay_t<decltype(F[0])>;
    Labeling<T> G(at(rect.poset.hat_size()), F[at(st.poset.top())]);
    for (int x = 0; x < rect.poset.size(); ++x) {
      auto [i, j] = rect.coord[at(x)];
      G[at(x)] = F[at(st.index(std::min(i, j), std::max(i, j)))];
    }
    G[at(rect.poset.bottom())] = F[at(st.poset.bottom())];
    auto fs = F;
    auto gs = G;
    for (int k = 1; k <= 2 * r + 2; ++k) {
      fs = browmotion(st.poset, fs);
      gs = browmotion(rect.poset, gs);
      for (int v = 0; v < st.poset.size(); ++v) {
        auto [i, j] = st.coord[at(v)];
        long num = 1, den = 1;
        if (k <= i + j)
          den = 2;
        else if (k >= i + j + 2 && k <= 2 * r + 1)
          num = 2;
        ++rep.checked;
        if (!(fs[at(v)] == gs[at(rect.index(i, j))] * constant(fs[0], num, den))) {
          rep.fail("r=" + std::to_string(r) + " k=" + std::to_string(k) + " at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")" + (point.empty() ? "" : " point " + point));
          return false;
        }
      }
    }
    return true;
  };
  for_each_sample(st.poset, mode, true, run);
  return rep;
}

OracleReport local_identity_check(const MinusculePoset& mp, int alpha, const EqualityMode& mode) {
  OracleReport rep;
  const Poset& p = mp.poset;
  const auto comps = file_decomposition(mp, alpha);
  int depth = 0;
  for (const auto& c : comps) depth = std::max(depth, c.m);
  auto run = [&](const auto& F, const std::string& point) {
    const auto traj = trajectory(F, depth, [&](const auto& G) { return browmotion(p, G); });
    using T = std::decay_t<decltype(F[0])>;
    const auto sF = sigma(mp, F, alpha);
    const std::string where = point.empty() ? "" : " point " + point;
    for (const auto& c : comps) {
      const auto m = static_cast<std::size_t>(c.m);
      T lhs = one_like(F[0]);
      T lhs_s = lhs;
      for (std::size_t i = 1; i <= m; ++i) {
        const auto x = at(c.x[i - 1]);
        lhs = lhs * traj[i - 1][x] * traj[i][x];
        lhs_s = lhs_s * F[x] * sF[x];
      }
      T rhs = F[at(c.u)] * traj[m][at(c.v)];
      T rhs_s = F[at(c.u)] * F[at(c.v)];
      for (std::size_t i = 1; i < m; ++i) {
        const auto y = at(c.y[i - 1]);
        if (c.shape == Shape::H) {
          rhs = rhs * traj[i][y] * traj[i][y];
          rhs_s = rhs_s * F[y] * F[y];
        } else {
          const auto z = at(c.z[i - 1]);
          rhs = rhs * traj[i][y] * traj[i][z];
          rhs_s = rhs_s * F[y] * F[z];
        }
      }
      rep.checked += 2;
      if (!(lhs == rhs)) rep.fail("rowmotion identity fails on component " + c.name() + where);
      if (!(lhs_s == rhs_s)) rep.fail("file toggle identity fails on component " + c.name() + where);
    }
    return rep.ok;
  };
  for_each_sample(p, mode, false, run);
  return rep;
}

}  // namespace rowmotion
