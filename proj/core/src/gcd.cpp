// Multivariate gcd over Z.
//
// Pipeline: strip integer and monomial content, fold over variables that
// occur in only one argument, then bound the gcd degree in each variable by
// a univariate gcd of random images mod 2^61-1. Variables with bound zero are
// evaluated away and the smaller gcd is lifted back by trial division. What
// survives goes to a primitive PRS over the variable of least degree.

#include <algorithm>

#include "rowmotion/polynomial.hpp"

namespace rowmotion {

GcdStats& gcd_stats() {
  thread_local GcdStats stats;
  return stats;
}

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 x = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(x & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

std::uint64_t splitmix() {
  thread_local std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using UPoly = std::vector<std::uint64_t>;  // low degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int upoly_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[off + k] = submod(a[off + k], mulmod(f, b[k]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// Image of p in F_p[x_var] with every other variable fixed at point[i].
UPoly univariate_image(const MultiPoly& p, int var, const std::vector<std::uint64_t>& point) {
  UPoly out(p.degree(var) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.coef.get_mpz_t(), kP);
    for (int i = 0; i < kMaxVars && v; ++i) {
      if (i == var) continue;
      unsigned e = t.mono.exponent(i);
      if (e) v = mulmod(v, powmod(point[static_cast<std::size_t>(i)], e));
    }
    auto& slot = out[t.mono.exponent(var)];
    slot = addmod(slot, v);
  }
  return out;
}

// Upper bound for deg_var gcd(a, b); exact with high probability.
int probe_degree(const MultiPoly& a, const MultiPoly& b, int var) {
  const unsigned da = a.degree(var), db = b.degree(var);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<std::uint64_t> point(kMaxVars);
    for (auto& x : point) x = 1 + splitmix() % (kP - 1);
    UPoly ua = univariate_image(a, var, point), ub = univariate_image(b, var, point);
    if (ua.back() == 0 || ub.back() == 0) continue;  // leading coefficient vanished
    return upoly_gcd_degree(std::move(ua), std::move(ub));
  }
  return static_cast<int>(std::min(da, db));
}

MultiPoly positive(MultiPoly p) {
  if (!p.is_zero() && p.leading().coef < 0) p = -p;
  return p;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer c = p.integer_content();
  if (p.leading().coef < 0) c = -c;
  return c == 1 ? p : p.div_term(c, Monomial{});
}

MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b);

// gcd of `other` with all coefficients of `p` viewed in the variables `mask`.
MultiPoly fold_coefficients(const MultiPoly& p, std::uint32_t mask, MultiPoly g) {
  auto coeffs = p.coefficients_in_set(mask);
  std::vector<const MultiPoly*> order;
  for (const auto& [m, c] : coeffs) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const MultiPoly* x, const MultiPoly* y) { return x->size() < y->size(); });
  for (const MultiPoly* c : order) {
    g = gcd(g, *c);
    if (g.is_constant()) return MultiPoly(1L);
  }
  return primitive_part(g);
}

MultiPoly lead_coeff_in(const MultiPoly& p, int var, unsigned deg) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(var) != deg) continue;
    Monomial m = t.mono;
    m.set_exponent(var, 0);
    ts.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(ts));
}

MultiPoly content_in(const MultiPoly& p, int var) {
  auto coeffs = p.coefficients_in(var);
  MultiPoly g;
  for (const auto& [e, c] : coeffs) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly prem(MultiPoly a, const MultiPoly& b, int var) {
  const unsigned db = b.degree(var);
  const MultiPoly lb = lead_coeff_in(b, var, db);
  while (!a.is_zero()) {
    const unsigned da = a.degree(var);
    if (da < db) break;
    MultiPoly la = lead_coeff_in(a, var, da);
    a = lb * a - (la * b).mul_term(Integer{1}, Monomial::variable(var, da - db));
  }
  return a;
}

MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b, std::uint32_t shared) {
  ++gcd_stats().prs_fallback;
  int var = -1;
  unsigned best = ~0u;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!((shared >> i) & 1u)) continue;
    unsigned d = std::max(a.degree(i), b.degree(i));
    if (d < best) {
      best = d;
      var = i;
    }
  }
  MultiPoly ca = content_in(a, var), cb = content_in(b, var);
  MultiPoly cg = gcd(ca, cb);
  MultiPoly pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  while (true) {
    if (pb.degree(var) == 0) {
      pb = MultiPoly(1L);
      break;
    }
    MultiPoly r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      pb = MultiPoly(1L);
      break;
    }
    r = *divide_exact(r, content_in(r, var));
    pa = std::move(pb);
    pb = std::move(r);
  }
  return primitive_part(pb * cg);
}

// a, b primitive, positive leading coefficient, no monomial content.
MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly(1L);
  if (a == b) return a;
  const std::uint32_t sa = a.support(), sb = b.support(), shared = sa & sb;
  if (shared == 0) return MultiPoly(1L);
  if (sa & ~shared) return fold_coefficients(a, sa & ~shared, b);
  if (sb & ~shared) return fold_coefficients(b, sb & ~shared, a);

  std::uint32_t zero_vars = 0;
  bool tight_a = true, tight_b = true;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!((shared >> i) & 1u)) continue;
    int d = probe_degree(a, b, i);
    if (d == 0) zero_vars |= 1u << i;
    if (d != static_cast<int>(a.degree(i))) tight_a = false;
    if (d != static_cast<int>(b.degree(i))) tight_b = false;
  }
  if (zero_vars == shared) {
    ++gcd_stats().probe_coprime;
    return MultiPoly(1L);
  }
  if (zero_vars) {
    // The gcd does not involve zero_vars, so it divides the gcd of any
    // specialization of them; a specialization whose gcd divides a and b
    // therefore gives the gcd itself.
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<Integer> values(kMaxVars);
      for (auto& v : values) v = static_cast<unsigned long>(2 + splitmix() % 1000003);
      MultiPoly g0 = primitive_part(gcd(a.evaluate_partial(zero_vars, values), b.evaluate_partial(zero_vars, values)));
      if (g0.is_constant()) {
        ++gcd_stats().evaluation_lift;
        return MultiPoly(1L);
      }
      if (divide_exact(a, g0) && divide_exact(b, g0)) {
        ++gcd_stats().evaluation_lift;
        return g0;
      }
    }
  } else {
    if (tight_a && divide_exact(b, a)) {
      ++gcd_stats().divisor_hit;
      return a;
    }
    if (tight_b && divide_exact(a, b)) {
      ++gcd_stats().divisor_hit;
      return b;
    }
  }
  return gcd_prs(a, b, shared);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  auto& st = gcd_stats();
  ++st.calls;
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  const Integer ca = a.integer_content(), cb = b.integer_content();
  Integer g_int;
  mpz_gcd(g_int.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Monomial ma = a.monomial_content(), mb = b.monomial_content();
  const Monomial g_mono = gcd(ma, mb);
  if (a.is_term() || b.is_term()) {
    ++st.trivial;
    return MultiPoly(g_int, g_mono);
  }
  MultiPoly pa = positive(a.div_term(ca, ma)), pb = positive(b.div_term(cb, mb));
  if (pa.is_one() || pb.is_one()) {
    ++st.trivial;
    return MultiPoly(g_int, g_mono);
  }
  return gcd_primitive(pa, pb).mul_term(g_int, g_mono);
}

}  // namespace rowmotion
