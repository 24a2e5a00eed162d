#include "rowmotion/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rowmotion {

VarTable::VarTable(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

int VarTable::add(const std::string& name) {
  if (lookup_.count(name)) throw std::invalid_argument("duplicate variable name " + name);
  if (size() >= kMaxVars) throw std::length_error("too many variables (max 32)");
  names_.push_back(name);
  lookup_[name] = size() - 1;
  return size() - 1;
}

int VarTable::index(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw std::out_of_range("unknown variable " + name);
  return it->second;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      Integer s = subtract ? Integer(a[i].coef - b[j].coef) : Integer(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer{c}});
}

MultiPoly::MultiPoly(Integer c) {
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

MultiPoly::MultiPoly(Integer c, Monomial m) {
  if (c != 0) terms_.push_back({m, std::move(c)});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_one() const { return is_constant() && !is_zero() && terms_[0].coef == 1; }

Integer MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Integer{0} : terms_[0].coef;
}

unsigned MultiPoly::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (std::size_t k = 1; k < terms_.size() && !m.is_one(); ++k) m = gcd(m, terms_[k].mono);
  return m;
}

Integer MultiPoly::integer_content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_term()) return y.mul_term(x.terms_[0].coef, x.terms_[0].mono);
  if (y.is_term()) return x.mul_term(y.terms_[0].coef, y.terms_[0].mono);
  // Johnson's heap product: one heap entry per row of the shorter factor.
  const auto& a = x.size() <= y.size() ? x.terms_ : y.terms_;
  const auto& b = x.size() <= y.size() ? y.terms_ : x.terms_;
  struct Node {
    Monomial m;
    std::uint32_t i, j;
  };
  auto less = [](const Node& p, const Node& q) { return compare(p.m, q.m) < 0; };
  std::vector<Node> heap;
  heap.reserve(a.size());
  heap.push_back({a[0].mono * b[0].mono, 0, 0});
  MultiPoly out;
  Integer acc;
  while (!heap.empty()) {
    const Monomial cur = heap.front().m;
    acc = 0;
    while (!heap.empty() && heap.front().m == cur) {
      std::pop_heap(heap.begin(), heap.end(), less);
      Node n = heap.back();
      heap.pop_back();
      mpz_addmul(acc.get_mpz_t(), a[n.i].coef.get_mpz_t(), b[n.j].coef.get_mpz_t());
      if (n.j == 0 && n.i + 1 < a.size()) {
        heap.push_back({a[n.i + 1].mono * b[0].mono, n.i + 1, 0});
        std::push_heap(heap.begin(), heap.end(), less);
      }
      if (n.j + 1 < b.size()) {
        heap.push_back({a[n.i].mono * b[n.j + 1].mono, n.i, n.j + 1});
        std::push_heap(heap.begin(), heap.end(), less);
      }
    }
    if (acc != 0) out.terms_.push_back({cur, acc});
  }
  return out;
}

MultiPoly MultiPoly::mul_term(const Integer& c, const Monomial& m) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

MultiPoly MultiPoly::div_term(const Integer& c, const Monomial& m) const {
  if (c == 0) throw ArithmeticError("division by zero");
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto q = divide(t.mono, m);
    if (!q) throw std::logic_error("div_term: monomial does not divide");
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    r.terms_.push_back({*q, std::move(qc)});
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(int var) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exponent(var);
    if (e) m.set_exponent(var, 0);
    buckets[e].push_back({m, t.coef});
  }
  std::map<unsigned, MultiPoly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

std::map<Monomial, MultiPoly> MultiPoly::coefficients_in_set(std::uint32_t mask) const {
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Monomial in = t.mono.restrict_to(mask);
    Monomial rest = t.mono.restrict_to(~mask);
    buckets[in].push_back({rest, t.coef});
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [m, ts] : buckets) out.emplace(m, from_terms(std::move(ts)));
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> powers(point.size());
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (!e) continue;
      if (static_cast<std::size_t>(i) >= point.size()) throw std::out_of_range("evaluation point too short");
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.push_back(Rational{1});
      while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(i)]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::evaluate_partial(std::uint32_t mask, std::span<const Integer> values) const {
  std::vector<std::vector<Integer>> powers(kMaxVars);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Integer c = t.coef;
    Monomial m = t.mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!((mask >> i) & 1u)) continue;
      unsigned e = m.exponent(i);
      if (!e) continue;
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.push_back(Integer{1});
      while (pw.size() <= e) pw.push_back(pw.back() * values[static_cast<std::size_t>(i)]);
      c *= pw[e];
      m.set_exponent(i, 0);
    }
    out.push_back({m, std::move(c)});
  }
  return from_terms(std::move(out));
}

std::string MultiPoly::to_string(const VarTable* vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coef;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (!e) continue;
      if (wrote) os << "*";
      if (vars && i < vars->size())
        os << vars->name(i);
      else
        os << "x" << i;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coef != b.terms_[k].coef) return false;
  return true;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return MultiPoly{};
  if (b.is_term()) {
    const auto& bt = b.leading();
    for (const auto& t : a.terms()) {
      if (!divides(bt.mono, t.mono) || !mpz_divisible_p(t.coef.get_mpz_t(), bt.coef.get_mpz_t()))
        return std::nullopt;
    }
    return a.div_term(bt.coef, bt.mono);
  }
  if (b.total_degree() > a.total_degree()) return std::nullopt;
  // The extreme terms of a product are products of extreme terms.
  if (!divides(b.leading().mono, a.leading().mono) || !divides(b.trailing().mono, a.trailing().mono))
    return std::nullopt;
  if (!mpz_divisible_p(a.leading().coef.get_mpz_t(), b.leading().coef.get_mpz_t()) ||
      !mpz_divisible_p(a.trailing().coef.get_mpz_t(), b.trailing().coef.get_mpz_t()))
    return std::nullopt;
  const std::uint32_t sb = b.support();
  for (int i = 0; i < kMaxVars; ++i)
    if (((sb >> i) & 1u) && b.degree(i) > a.degree(i)) return std::nullopt;

  std::vector<Term> q;
  MultiPoly r = a;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    auto m = divide(lr.mono, lb.mono);
    if (!m || !mpz_divisible_p(lr.coef.get_mpz_t(), lb.coef.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lr.coef.get_mpz_t(), lb.coef.get_mpz_t());
    r -= b.mul_term(c, *m);
    q.push_back({*m, std::move(c)});
  }
  MultiPoly out;
  out = MultiPoly::from_terms(std::move(q));
  return out;
}

}  // namespace rowmotion
