#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rowmotion/catalog.hpp"
#include "rowmotion/numeric.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/ratfun.hpp"

namespace rowmotion {

/// Values on the hat poset. Index p.top() holds A = F(1^), p.bottom() holds
/// B = F(0^). T is RatFun (symbolic), Rational (sample points) or a tropical
/// semifield.
template <class T>
using Labeling = std::vector<T>;

inline Rational power(const Rational& x, long e) {
  Rational r{1}, b = e < 0 ? inverse(x) : x;
  for (unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e); k; k >>= 1, b *= b)
    if (k & 1) r *= b;
  return r;
}
inline RatFun power(const RatFun& x, long e) { return x.pow(static_cast<int>(e)); }

template <class T>
Labeling<T> make_labeling(const Poset& p, std::vector<T> values, T top, T bottom) {
  if (static_cast<int>(values.size()) != p.size()) throw std::invalid_argument("labeling size does not match poset");
  values.push_back(std::move(top));
  values.push_back(std::move(bottom));
  return values;
}

/// F(v) <- (sum of F over lower covers) / (F(v) * sum of 1/F over upper covers).
template <class T>
void btoggle_inplace(const Poset& p, Labeling<T>& F, int v) {
  if (v < 0 || v >= p.size()) throw std::out_of_range("toggle outside the poset");
  auto lo = p.hat_lower_covers(v), up = p.hat_upper_covers(v);
  const auto at = [](int i) { return static_cast<std::size_t>(i); };
  T low = F[at(lo[0])];
  for (std::size_t k = 1; k < lo.size(); ++k) low = low + F[at(lo[k])];
  T high = inverse(F[at(up[0])]);
  for (std::size_t k = 1; k < up.size(); ++k) high = high + inverse(F[at(up[k])]);
  F[at(v)] = low / (F[at(v)] * high);
}

template <class T>
Labeling<T> btoggle(const Poset& p, Labeling<T> F, int v) {
  btoggle_inplace(p, F, v);
  return F;
}

/// Toggles along `order` with its last entry applied first.
template <class T>
Labeling<T> browmotion_along(const Poset& p, Labeling<T> F, std::span<const int> order) {
  for (auto it = order.rbegin(); it != order.rend(); ++it) btoggle_inplace(p, F, *it);
  return F;
}

/// Top to bottom along the reverse of p.linear_extension().
template <class T>
Labeling<T> browmotion(const Poset& p, Labeling<T> F) {
  const auto& le = p.linear_extension();
  return browmotion_along(p, std::move(F), std::span<const int>(le));
}

/// Product of the toggles over the file P^alpha (they commute).
template <class T>
Labeling<T> sigma(const MinusculePoset& mp, Labeling<T> F, int alpha) {
  for (int v : mp.file(alpha)) btoggle_inplace(mp.poset, F, v);
  return F;
}

/// sigma_{order[0]} acts first, then sigma_{order[1]}, and so on.
template <class T>
Labeling<T> coxeter_motion(const MinusculePoset& mp, Labeling<T> F, std::span<const int> order) {
  for (int alpha : order) F = sigma(mp, std::move(F), alpha);
  return F;
}

/// gamma_1 (part 1) and gamma_2 (part 2) of the Dynkin bipartition.
template <class T>
Labeling<T> gamma_part(const MinusculePoset& mp, Labeling<T> F, int part) {
  const auto parts = mp.cartan.bipartition();
  for (int alpha = 1; alpha <= mp.cartan.rank(); ++alpha)
    if (parts[static_cast<std::size_t>(alpha - 1)] == part) F = sigma(mp, std::move(F), alpha);
  return F;
}

/// delta = gamma_1 gamma_2 gamma_1 ... with h factors; the rightmost acts first.
template <class T>
Labeling<T> delta_map(const MinusculePoset& mp, Labeling<T> F) {
  for (int k = mp.coxeter_number - 1; k >= 0; --k) F = gamma_part(mp, std::move(F), k % 2 == 0 ? 1 : 2);
  return F;
}

/// [F, map(F), ..., map^steps(F)].
template <class T, class Map>
std::vector<Labeling<T>> trajectory(const Labeling<T>& F, int steps, Map&& map) {
  std::vector<Labeling<T>> out{F};
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k < steps; ++k) out.push_back(map(out.back()));
  return out;
}

/// Product of F over the file P^alpha.
template <class T>
T phi(const MinusculePoset& mp, const Labeling<T>& F, int alpha) {
  const auto& file = mp.file(alpha);
  T r = F[static_cast<std::size_t>(file[0])];
  for (std::size_t k = 1; k < file.size(); ++k) r = r * F[static_cast<std::size_t>(file[k])];
  return r;
}

/// Product over x in P of F(x) / (sum of F over lower covers of x in P^).
template <class T>
T psi(const Poset& p, const Labeling<T>& F) {
  const auto at = [](int i) { return static_cast<std::size_t>(i); };
  T r = one_like(F[0]);
  for (int x = 0; x < p.size(); ++x) {
    auto lo = p.hat_lower_covers(x);
    T s = F[at(lo[0])];
    for (std::size_t k = 1; k < lo.size(); ++k) s = s + F[at(lo[k])];
    r = r * (F[at(x)] / s);
  }
  return r;
}

/// Largest offset (rank(v) - rank(v_0))/2 over the file.
inline int phi_prime_span(const MinusculePoset& mp, int alpha) {
  const auto& file = mp.file(alpha);
  const auto r = [&](int v) { return mp.rank[static_cast<std::size_t>(v)]; };
  return (r(file.back()) - r(file.front())) / 2;
}

/// Phi'_alpha(rho^k F) read off a rowmotion trajectory traj[j] = rho^j F,
/// which must extend to index k + phi_prime_span(mp, alpha).
template <class T>
T phi_prime(const MinusculePoset& mp, const std::vector<Labeling<T>>& traj, int alpha, int k = 0) {
  const auto& file = mp.file(alpha);
  const auto r = [&](int v) { return mp.rank[static_cast<std::size_t>(v)]; };
  T out = one_like(traj[0][0]);
  for (int v : file) {
    const int j = k + (r(v) - r(file.front())) / 2;
    out = out * traj.at(static_cast<std::size_t>(j))[static_cast<std::size_t>(v)];
  }
  return out;
}

/// Symbolic setting: variables 0..N-1 for the elements, N for A, N+1 for B,
/// so variable indices coincide with hat indices.
VarTable symbolic_vars(const Poset& p, const std::string& prefix);

/// F(v) = X_v, F(1^) = A, F(0^) = B.
Labeling<RatFun> symbolic_labeling(const Poset& p);

/// X in terms of Z: X(v) is the sum over saturated chains from v down to a
/// minimal element of the product of Z along the chain. A and B are kept.
std::vector<RatFun> x_in_terms_of_z(const Poset& p);

/// Z in terms of X: Z(v) = X(v) for minimal v, else X(v) / (sum of X over
/// lower covers in P).
std::vector<RatFun> z_in_terms_of_x(const Poset& p);

/// Initial labeling X written in the Z variables.
Labeling<RatFun> symbolic_labeling_z(const Poset& p);

}  // namespace rowmotion
