#include "rowmotion/ratfun.hpp"

#include <bit>

namespace rowmotion {

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("internal: inexact division by a gcd");
  return std::move(*q);
}

}  // namespace

RatFun RatFun::fraction(MultiPoly n, MultiPoly d) {
  if (d.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (n.is_zero()) return RatFun();
  MultiPoly g = gcd(n, d);
  if (!g.is_one()) {
    n = exact(n, g);
    d = exact(d, g);
  }
  if (d.leading().coef < 0) {
    n = -n;
    d = -d;
  }
  return RatFun(std::move(n), std::move(d), true);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFun::fraction(a.num_ + b.num_, a.den_);
  MultiPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    // Reduced inputs with coprime denominators give a reduced sum.
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
  }
  MultiPoly bd = exact(a.den_, g), dd = exact(b.den_, g);
  MultiPoly t = a.num_ * dd + b.num_ * bd;
  if (t.is_zero()) return RatFun();
  MultiPoly g2 = gcd(t, g);
  if (!g2.is_one()) {
    t = exact(t, g2);
    dd = exact(b.den_, g2);
  } else {
    dd = b.den_;
  }
  MultiPoly den = bd * dd;
  if (den.leading().coef < 0) return RatFun(-t, -den, true);
  return RatFun(std::move(t), std::move(den), true);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  MultiPoly g1 = a.den_.is_one() || b.num_.is_constant() ? MultiPoly(1L) : gcd(b.num_, a.den_);
  MultiPoly g2 = b.den_.is_one() || a.num_.is_constant() ? MultiPoly(1L) : gcd(a.num_, b.den_);
  MultiPoly n = exact(a.num_, g2) * exact(b.num_, g1);
  MultiPoly d = exact(a.den_, g1) * exact(b.den_, g2);
  // Constant factors escape the polynomial gcds above.
  if (a.num_.is_constant() || b.num_.is_constant() || a.den_.is_constant() || b.den_.is_constant()) {
    Integer cn = n.integer_content(), cd = d.integer_content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c != 1) {
      n = n.div_term(c, Monomial{});
      d = d.div_term(c, Monomial{});
    }
  }
  if (d.leading().coef < 0) return RatFun(-n, -d, true);
  return RatFun(std::move(n), std::move(d), true);
}

RatFun inverse(const RatFun& f) {
  if (f.is_zero()) throw ArithmeticError("inverse of the zero function");
  if (f.num().leading().coef < 0) return RatFun::fraction(-f.den(), -f.num());
  return RatFun::fraction(f.den(), f.num());
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * inverse(b); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse(*this).pow(-e);
  RatFun out(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
  if (out.den_.leading().coef < 0) out = RatFun(-out.num_, -out.den_, true);
  return out;
}

Rational RatFun::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RatFun::to_string(const VarTable* vars) const {
  if (den_.is_one()) return num_.to_string(vars);
  auto wrap = [&](const MultiPoly& p) {
    std::string s = p.to_string(vars);
    return p.is_term() ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFun substitute(const RatFun& f, std::span<const RatFun> sigma) {
  std::vector<std::vector<RatFun>> powers(sigma.size());
  auto eval = [&](const MultiPoly& p) {
    RatFun sum;
    for (const auto& t : p.terms()) {
      RatFun v(MultiPoly(t.coef));
      for (int i = 0; i < kMaxVars; ++i) {
        unsigned e = t.mono.exponent(i);
        if (!e) continue;
        if (static_cast<std::size_t>(i) >= sigma.size()) throw std::out_of_range("substitution misses a variable");
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.push_back(RatFun(1L));
        while (pw.size() <= e) pw.push_back(pw.back() * sigma[static_cast<std::size_t>(i)]);
        v *= pw[e];
      }
      sum += v;
    }
    return sum;
  };
  RatFun d = eval(f.den());
  if (d.is_zero()) throw ArithmeticError("substitution makes the denominator vanish");
  return eval(f.num()) / d;
}

std::vector<Rational> random_point(std::uint64_t& state, int nvars) {
  std::vector<Rational> pt;
  pt.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    pt.emplace_back(static_cast<unsigned long>(1 + (z % (std::uint64_t{1} << 31))));
  }
  return pt;
}

bool ratfun_equal(const RatFun& f, const RatFun& g, const EqualityMode& mode) {
  if (mode.exact) return f == g;
  const std::uint32_t used = f.num().support() | f.den().support() | g.num().support() | g.den().support();
  const int nvars = used ? 32 - std::countl_zero(used) : 1;
  std::uint64_t state = mode.seed;
  int done = 0, misses = 0;
  while (done < mode.trials) {
    auto pt = random_point(state, nvars);
    Rational df = f.den().evaluate(pt), dg = g.den().evaluate(pt);
    if (df == 0 || dg == 0) {
      if (++misses > 10 * mode.trials) throw ArithmeticError("every sample point hit a pole");
      continue;
    }
    if (f.num().evaluate(pt) * dg != g.num().evaluate(pt) * df) return false;
    ++done;
  }
  return true;
}

Rational tropicalize(const RatFun& f, std::span<const Rational> point, bool use_max) {
  auto trop = [&](const MultiPoly& p) {
    if (p.is_zero()) throw ArithmeticError("tropicalization of zero");
    Rational best;
    bool first = true;
    for (const auto& t : p.terms()) {
      if (t.coef <= 0) throw ArithmeticError("tropicalization needs positive coefficients");
      Rational v = 0;
      for (int i = 0; i < kMaxVars; ++i)
        if (unsigned e = t.mono.exponent(i)) v += point[static_cast<std::size_t>(i)] * e;
      if (first || (use_max ? v > best : v < best)) best = v;
      first = false;
    }
    return best;
  };
  return trop(f.num()) - trop(f.den());
}

}  // namespace rowmotion
