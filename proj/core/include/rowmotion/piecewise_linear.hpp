#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rowmotion/catalog.hpp"
#include "rowmotion/numeric.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

enum class PLSign { plus, minus };

/// Values on the hat poset: index p.top() holds a, p.bottom() holds b.
using PLState = std::vector<Rational>;

PLState make_pl_state(const Poset& p, std::vector<Rational> values, const Rational& a, const Rational& b);

/// Sign +: max over lower covers + min over upper covers - f(v).
/// Sign -: min over lower covers + max over upper covers - f(v).
void pl_toggle_inplace(const Poset& p, PLState& f, int v, PLSign sign);
PLState pl_toggle(const Poset& p, PLState f, int v, PLSign sign);

/// Toggles from top to bottom along the reverse of p.linear_extension().
PLState pl_rowmotion(const Poset& p, PLState f, PLSign sign);

/// 0 on I and 0^, 1 elsewhere (with a = 1, b = 0).
PLState chi_plus(const Poset& p, const Ideal& I);
/// 1 on I and 0^, 0 elsewhere (with a = 0, b = 1).
PLState chi_minus(const Poset& p, const Ideal& I);

/// Inverse of chi_plus / chi_minus; std::nullopt if f is not such a vector.
std::optional<Ideal> ideal_from_chi(const Poset& p, const PLState& f, PLSign sign);

/// Random state with values num/den, num and den uniform in 1..1000.
PLState random_pl_state(const Poset& p, std::uint64_t& seed_state);

struct BridgeReport {
  int ideals_checked = 0;
  int states_checked = 0;
  int observed_order = 0;  // lcm of orders over the random states
  bool chi_ok = true;
  bool order_ok = true;
  bool reciprocity_ok = true;
  std::string counterexample;  // empty when everything passed

  bool ok() const { return chi_ok && order_ok && reciprocity_ok; }
};

/// Characteristic vectors intertwine PL and combinatorial rowmotion for every
/// ideal; PL rowmotion has order h on random states; and
/// (R^{rank v} f)(v) + f(iota v) = a + b. Both signs are checked.
BridgeReport bridge_check(const MinusculePoset& mp, std::uint64_t seed = 1, int states = 100);

}  // namespace rowmotion
