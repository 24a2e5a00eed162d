#pragma once

#include <string>

#include "rowmotion/birational.hpp"
#include "rowmotion/catalog.hpp"
#include "rowmotion/ratfun.hpp"

namespace rowmotion {

struct OracleReport {
  bool ok = true;
  int checked = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (ok) counterexample = std::move(what);
    ok = false;
  }
};

// Double-tailed diamond D_n w1. Elements are labeled v_1 (maximum) down to
// v_{2n-3} (minimum) with the two middle elements v_{n-1}^+ and v_{n-1}^-.
// All closed forms below take A = B = 1 and are written in the Z variables
// (variable index = element index).

/// Label of element v: "v3", "v+", "v-".
std::string diamond_label(const MinusculePoset& mp, int v);

/// Element index of v_i (1 <= i <= 2n-3, i != n-1).
int diamond_element(const MinusculePoset& mp, int i);
/// Element index of v_{n-1}^+ (sign > 0) or v_{n-1}^- (sign < 0).
int diamond_middle(const MinusculePoset& mp, int sign);

/// C(i;l) (sign 0) or C^+(i;l), C^-(i;l) as a monomial in Z. Throws
/// std::out_of_range outside the range where the monomial is defined.
RatFun diamond_monomial(const MinusculePoset& mp, int i, int l, int sign);

/// X(v) expressed through the C monomials.
RatFun diamond_initial(const MinusculePoset& mp, int v);

/// Closed form of (rho^k X)(v) for 1 <= k <= rank(v); std::out_of_range
/// otherwise.
RatFun diamond_oracle(const MinusculePoset& mp, int k, int v);

/// Compares every closed form with the generic engine (exact).
OracleReport diamond_check(const MinusculePoset& mp);

/// Shifted staircase {0 <= i <= j <= r} against the rectangle (r+1)x(r+1)
/// with A = B = 1: (rho^k F)(i,j) = (rho~^k F~)(i,j) times 1/2, 1, 2 or 1
/// according to k against i+j. Exact mode is symbolic.
OracleReport doubling_check(int r, const EqualityMode& mode);

/// The rowmotion and file-toggle identities for every component G_m or H_m
/// of the file decomposition at alpha.
OracleReport local_identity_check(const MinusculePoset& mp, int alpha, const EqualityMode& mode);

/// Staircase and rectangle posets used by doubling_check, with coordinates.
struct GridPoset {
  Poset poset;
  std::vector<Coord> coord;
  int index(int i, int j) const;  // -1 when absent
};
GridPoset shifted_staircase(int r);
GridPoset rectangle(int rows, int cols);

}  // namespace rowmotion
