#include "rowmotion/combinatorial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rowmotion {

Ideal toggle(const Poset& p, const Ideal& I, int v) {
  Ideal out = I;
  if (I.contains(v)) {
    for (int z : p.upper_covers(v))
      if (I.contains(z)) return out;
    out.erase(v);
  } else {
    for (int w : p.lower_covers(v))
      if (!I.contains(w)) return out;
    out.insert(v);
  }
  return out;
}

Ideal rowmotion(const Poset& p, const Ideal& I) {
  std::vector<int> gens;
  for (int v = 0; v < p.size(); ++v) {
    if (I.contains(v)) continue;
    bool minimal = true;
    for (int w : p.lower_covers(v))
      if (!I.contains(w)) {
        minimal = false;
        break;
      }
    if (minimal) gens.push_back(v);
  }
  return generated_ideal(p, gens);
}

Ideal rowmotion_by_toggles(const Poset& p, const Ideal& I, std::span<const int> order) {
  Ideal out = I;
  for (auto it = order.rbegin(); it != order.rend(); ++it) out = toggle(p, out, *it);
  return out;
}

std::vector<Orbit> rowmotion_orbits(const Poset& p) {
  std::vector<Orbit> out;
  std::map<Ideal, bool> seen;
  // for_each_ideal runs in lex order, so the first unseen ideal of each
  // orbit is its smallest member.
  for (const auto& I : enumerate_ideals(p)) {
    if (seen.count(I)) continue;
    Orbit o{I, {}};
    Ideal cur = I;
    do {
      seen[cur] = true;
      o.members.push_back(cur);
      cur = rowmotion(p, cur);
    } while (cur != I);
    out.push_back(std::move(o));
  }
  return out;
}

OrbitStats orbit_stats(const MinusculePoset& mp) {
  OrbitStats st;
  st.orbits = rowmotion_orbits(mp.poset);
  st.order = 1;
  for (const auto& o : st.orbits) {
    const int len = static_cast<int>(o.members.size());
    st.ideal_count += len;
    st.order = std::lcm(st.order, len);
    if (o.representative.count() == 0) st.empty_orbit_length = len;
    std::vector<Rational> avg(static_cast<std::size_t>(mp.lie.n), Rational{0});
    for (const auto& I : o.members)
      for (int v : I.members()) avg[static_cast<std::size_t>(mp.color[static_cast<std::size_t>(v)] - 1)] += 1;
    for (auto& a : avg) a /= len;
    st.file_average.push_back(std::move(avg));
  }
  return st;
}

}  // namespace rowmotion
