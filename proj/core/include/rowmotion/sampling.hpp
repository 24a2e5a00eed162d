#pragma once

#include <sstream>
#include <string>

#include "rowmotion/birational.hpp"
#include "rowmotion/ratfun.hpp"

namespace rowmotion {

/// Initial states for identity checks. Exact mode yields one symbolic state
/// (X written in the Z variables); probabilistic mode yields mode.trials
/// rational states with coordinates uniform in 1..2^31. `fn(F, point)` gets
/// the state and a printable sample point (empty in exact mode) and returns
/// false to stop early. With unit_boundary, A = B = 1.
template <class Fn>
void for_each_sample(const Poset& p, const EqualityMode& mode, bool unit_boundary, Fn&& fn) {
  if (mode.exact) {
    Labeling<RatFun> F = symbolic_labeling_z(p);
    if (unit_boundary) {
      F[static_cast<std::size_t>(p.top())] = RatFun(1L);
      F[static_cast<std::size_t>(p.bottom())] = RatFun(1L);
    }
    fn(F, std::string{});
    return;
  }
  std::uint64_t state = mode.seed;
  for (int t = 0; t < mode.trials; ++t) {
    Labeling<Rational> F = random_point(state, p.hat_size());
    if (unit_boundary) {
      F[static_cast<std::size_t>(p.top())] = 1;
      F[static_cast<std::size_t>(p.bottom())] = 1;
    }
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < F.size(); ++i) os << (i ? "," : "") << F[i];
    os << "]";
    if (!fn(F, os.str())) return;
  }
}

}  // namespace rowmotion
