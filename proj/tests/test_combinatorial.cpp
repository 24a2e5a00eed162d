#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "rowmotion/catalog.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/lie.hpp"

using namespace rowmotion;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
Poset grid2x2() { return Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Topological order preferring the largest available index.
std::vector<int> largest_first_extension(const Poset& p) {
  std::vector<int> indeg(at(p.size())), out;
  for (auto [lo, hi] : p.covers()) ++indeg[at(hi)];
  std::set<int, std::greater<>> ready;
  for (int v = 0; v < p.size(); ++v)
    if (!indeg[at(v)]) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(v);
    for (int w : p.upper_covers(v))
      if (!--indeg[at(w)]) ready.insert(w);
  }
  return out;
}

Ideal iterate(const Poset& p, Ideal I, int k) {
  for (int j = 0; j < k; ++j) I = rowmotion::rowmotion(p, I);
  return I;
}

}  // namespace

TEST_CASE("toggle examples") {
  const Poset one(1, {});
  CHECK(toggle(one, Ideal(1), 0) == Ideal(1, {0}));

  const Poset chain(2, {{0, 1}});
  CHECK(toggle(chain, Ideal(2, {0}), 1) == Ideal(2, {0, 1}));
  CHECK(toggle(chain, Ideal(2, {0}), 0) == Ideal(2));
  // 1 cannot be added without 0
  CHECK(toggle(chain, Ideal(2), 1) == Ideal(2));

  const auto g = grid2x2();
  CHECK(toggle(g, Ideal(4, {0}), 3) == Ideal(4, {0}));
  CHECK(toggle(g, Ideal(4, {0}), 1) == Ideal(4, {0, 1}));
  CHECK(toggle(g, Ideal(4, {0, 1}), 0) == Ideal(4, {0, 1}));
}

TEST_CASE("rowmotion examples on the 2x2 grid") {
  const auto g = grid2x2();
  const Ideal empty(4), bottom(4, {0}), three(4, {0, 1, 2}), full(4, {0, 1, 2, 3});
  CHECK(rowmotion::rowmotion(g, empty) == bottom);
  CHECK(rowmotion::rowmotion(g, bottom) == three);
  CHECK(rowmotion::rowmotion(g, three) == full);
  CHECK(rowmotion::rowmotion(g, full) == empty);
  CHECK(rowmotion::rowmotion(g, Ideal(4, {0, 1})) == Ideal(4, {0, 2}));
  CHECK(rowmotion::rowmotion(g, Ideal(4, {0, 2})) == Ideal(4, {0, 1}));

  const auto mp = build_minuscule({Family::A, 3, 2});
  const auto st = orbit_stats(mp);
  CHECK(st.order == 4);
  CHECK(st.ideal_count == 6);
  std::multiset<std::size_t> lengths;
  for (const auto& o : st.orbits) lengths.insert(o.members.size());
  CHECK(lengths == std::multiset<std::size_t>{2, 4});
  for (const auto& avg : st.file_average)
    CHECK(avg == std::vector<Rational>{make_rational(1, 2), Rational(1), make_rational(1, 2)});
}

TEST_CASE("orbit statistics examples") {
  const auto a1 = orbit_stats(build_minuscule({Family::A, 1, 1}));
  CHECK(a1.order == 2);
  REQUIRE(a1.orbits.size() == 1);
  CHECK(a1.orbits[0].members.size() == 2);
  CHECK(a1.file_average[0][0] == make_rational(1, 2));

  const auto e6 = orbit_stats(build_minuscule({Family::E, 6, 6}));
  CHECK(e6.ideal_count == 27);
  CHECK(e6.order == 12);
}

TEST_CASE("toggles are involutions and rowmotion is a toggle composition") {
  for (const auto& lie : legal_lie_types(7)) {
    const auto mp = build_minuscule(lie);
    const auto& p = mp.poset;
    CAPTURE(to_string(lie));
    const auto ideals = enumerate_ideals(p);
    const auto le1 = p.linear_extension();
    const auto le2 = largest_first_extension(p);
    REQUIRE(is_linear_extension(p, le2));
    for (const auto& I : ideals) {
      for (int v = 0; v < p.size(); ++v) {
        const auto J = toggle(p, I, v);
        CHECK(is_ideal(p, J));
        CHECK(toggle(p, J, v) == I);
      }
      const auto R = rowmotion::rowmotion(p, I);
      CHECK(rowmotion_by_toggles(p, I, le1) == R);
      if (ideals.size() <= 60) CHECK(rowmotion_by_toggles(p, I, le2) == R);
    }
  }
}

TEST_CASE("periodicity and file homomesy on the catalog") {
  for (const auto& lie : legal_lie_types(7)) {
    const auto mp = build_minuscule(lie);
    CAPTURE(to_string(lie));
    const auto st = orbit_stats(mp);
    const int h = mp.coxeter_number;
    CHECK(st.order == h);
    CHECK(st.empty_orbit_length == h);
    const auto pd = pairing_data(lie);

    // independent recount straight from the orbits
    std::set<Ideal> seen;
    for (std::size_t o = 0; o < st.orbits.size(); ++o) {
      const auto& orbit = st.orbits[o];
      const auto& rep = orbit.representative;
      CHECK(iterate(mp.poset, rep, static_cast<int>(orbit.members.size())) == rep);
      CHECK(h % static_cast<int>(orbit.members.size()) == 0);
      CHECK(*std::min_element(orbit.members.begin(), orbit.members.end()) == rep);
      for (int alpha = 1; alpha <= lie.n; ++alpha) {
        long total = 0;
        for (const auto& I : orbit.members) {
          seen.insert(I);
          for (int v : mp.file(alpha)) total += I.contains(v);
        }
        const Rational avg = make_rational(total, static_cast<long>(orbit.members.size()));
        CHECK(avg == st.file_average[o][at(alpha - 1)]);
        CHECK(avg == pd.lambda[at(alpha - 1)]);
      }
    }
    CHECK(static_cast<int>(seen.size()) == st.ideal_count);
  }
}

TEST_CASE("empty poset") {
  const Poset p;
  const auto ideals = enumerate_ideals(p);
  REQUIRE(ideals.size() == 1);
  CHECK(rowmotion::rowmotion(p, ideals[0]) == ideals[0]);
  CHECK(rowmotion_orbits(p).size() == 1);
}
