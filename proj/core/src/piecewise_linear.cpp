#include "rowmotion/piecewise_linear.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "rowmotion/combinatorial.hpp"

namespace rowmotion {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string describe(const PLState& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

}  // namespace

PLState make_pl_state(const Poset& p, std::vector<Rational> values, const Rational& a, const Rational& b) {
  if (static_cast<int>(values.size()) != p.size()) throw std::invalid_argument("state size does not match poset");
  values.push_back(a);
  values.push_back(b);
  return values;
}

void pl_toggle_inplace(const Poset& p, PLState& f, int v, PLSign sign) {
  if (v < 0 || v >= p.size()) throw std::out_of_range("toggle outside the poset");
  const bool plus = sign == PLSign::plus;
  auto lo = p.hat_lower_covers(v), up = p.hat_upper_covers(v);
  Rational low = f[at(lo[0])], high = f[at(up[0])];
  for (int w : lo)
    if (plus ? f[at(w)] > low : f[at(w)] < low) low = f[at(w)];
  for (int z : up)
    if (plus ? f[at(z)] < high : f[at(z)] > high) high = f[at(z)];
  f[at(v)] = low + high - f[at(v)];
}

PLState pl_toggle(const Poset& p, PLState f, int v, PLSign sign) {
  pl_toggle_inplace(p, f, v, sign);
  return f;
}

PLState pl_rowmotion(const Poset& p, PLState f, PLSign sign) {
  const auto& le = p.linear_extension();
  for (auto it = le.rbegin(); it != le.rend(); ++it) pl_toggle_inplace(p, f, *it, sign);
  return f;
}

PLState chi_plus(const Poset& p, const Ideal& I) {
  PLState f(at(p.hat_size()), Rational{1});
  for (int v = 0; v < p.size(); ++v)
    if (I.contains(v)) f[at(v)] = 0;
  f[at(p.bottom())] = 0;
  return f;
}

PLState chi_minus(const Poset& p, const Ideal& I) {
  PLState f(at(p.hat_size()), Rational{0});
  for (int v = 0; v < p.size(); ++v)
    if (I.contains(v)) f[at(v)] = 1;
  f[at(p.bottom())] = 1;
  return f;
}

std::optional<Ideal> ideal_from_chi(const Poset& p, const PLState& f, PLSign sign) {
  const Rational in = sign == PLSign::plus ? 0 : 1, out = 1 - in;
  if (f.size() != at(p.hat_size())) return std::nullopt;
  if (f[at(p.bottom())] != in || f[at(p.top())] != (sign == PLSign::plus ? 1 : 0)) return std::nullopt;
  Ideal I(p.size());
  for (int v = 0; v < p.size(); ++v) {
    if (f[at(v)] == in)
      I.insert(v);
    else if (f[at(v)] != out)
      return std::nullopt;
  }
  if (!is_ideal(p, I)) return std::nullopt;
  return I;
}

PLState random_pl_state(const Poset& p, std::uint64_t& seed_state) {
  std::mt19937_64 rng(seed_state++);
  std::uniform_int_distribution<long> d(1, 1000);
  PLState f;
  f.reserve(at(p.hat_size()));
  for (int i = 0; i < p.hat_size(); ++i) f.push_back(make_rational(d(rng), d(rng)));
  return f;
}

BridgeReport bridge_check(const MinusculePoset& mp, std::uint64_t seed, int states) {
  const Poset& p = mp.poset;
  const int h = mp.coxeter_number;
  BridgeReport rep;

  for (const auto& I : enumerate_ideals(p)) {
    const Ideal RI = rowmotion(p, I);
    ++rep.ideals_checked;
    for (PLSign s : {PLSign::plus, PLSign::minus}) {
      const PLState f = s == PLSign::plus ? chi_plus(p, I) : chi_minus(p, I);
      auto back = ideal_from_chi(p, pl_rowmotion(p, f, s), s);
      if (!back || *back != RI) {
        if (rep.chi_ok)
          rep.counterexample = std::string("characteristic vector (") + (s == PLSign::plus ? "+" : "-") +
                               ") of ideal " + describe(f) + " does not map to its rowmotion";
        rep.chi_ok = false;
      }
    }
  }

  std::uint64_t st = seed;
  rep.observed_order = 1;
  for (int t = 0; t < states; ++t) {
    const PLState f0 = random_pl_state(p, st);
    for (PLSign s : {PLSign::plus, PLSign::minus}) {
      std::vector<PLState> traj{f0};
      for (int k = 1; k <= h; ++k) traj.push_back(pl_rowmotion(p, traj.back(), s));
      int ord = 0;
      for (int k = 1; k <= h && !ord; ++k)
        if (traj[at(k)] == f0) ord = k;
      if (!ord || h % ord != 0) {
        if (rep.order_ok && rep.chi_ok) rep.counterexample = "state " + describe(f0) + " is not fixed by R^h";
        rep.order_ok = false;
      } else {
        rep.observed_order = std::lcm(rep.observed_order, ord);
      }
      const Rational ab = f0[at(p.top())] + f0[at(p.bottom())];
      for (int v = 0; v < p.size(); ++v) {
        const int r = mp.rank[at(v)];
        if (traj[at(r)][at(v)] + f0[at(mp.involution[at(v)])] != ab) {
          if (rep.ok())
            rep.counterexample = "reciprocity fails at element " + std::to_string(v) + " for state " + describe(f0);
          rep.reciprocity_ok = false;
        }
      }
      ++rep.states_checked;
    }
  }
  if (states > 0 && rep.observed_order != h) {
    if (rep.ok()) rep.counterexample = "order on random states is " + std::to_string(rep.observed_order);
    rep.order_ok = false;
  }
  return rep;
}

}  // namespace rowmotion
