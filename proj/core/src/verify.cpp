#include "rowmotion/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <variant>

#include "rowmotion/birational.hpp"
#include "rowmotion/combinatorial.hpp"

namespace rowmotion {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

const std::vector<std::pair<Theorem, const char*>>& theorem_table() {
  static const std::vector<std::pair<Theorem, const char*>> table = {
      {Theorem::periodicity, "periodicity"},
      {Theorem::reciprocity, "reciprocity"},
      {Theorem::file_homomesy, "file_homomesy"},
      {Theorem::coxeter_periodicity, "coxeter_periodicity"},
      {Theorem::coxeter_homomesy, "coxeter_homomesy"},
      {Theorem::hopkins, "hopkins"},
      {Theorem::rel_phi_prime, "rel_phi_prime"},
      {Theorem::rel_phi, "rel_phi"},
      {Theorem::half_period_conjecture, "half_period_conjecture"},
      {Theorem::ab_reduction, "ab_reduction"},
  };
  return table;
}

std::vector<int> maximal_proper_divisors(int h) {
  std::vector<int> out;
  int m = h;
  for (int p = 2; p <= m; ++p) {
    if (m % p) continue;
    out.push_back(h / p);
    while (m % p == 0) m /= p;
  }
  return out;
}

std::string show(const Rational& q) { return q.get_str(); }
std::string show(const RatFun& f) {
  std::string s = f.to_string();
  return s.size() > 240 ? s.substr(0, 240) + "..." : s;
}

struct Outcome {
  int checks = 0;
  std::optional<Witness> witness;

  void fail(int vertex, int iterate, const std::string& point, std::string detail) {
    if (!witness) witness = Witness{vertex, iterate, point, std::move(detail)};
  }
};

template <class T>
struct Engine {
  // F starts rowmotion trajectories; Fx starts Coxeter-motion ones. In
  // exact mode they are the same generic state written in the Z and in the
  // X variables, since rowmotion fractions stay small in Z and file toggles
  // stay small in X. For sample points they coincide.
  struct Sample {
    Labeling<T> F;
    Labeling<T> Fx;
    std::string point;
  };
  using Traj = std::vector<Labeling<T>>;

  const MinusculePoset& mp;
  const Poset& p;
  const int h;
  const PairingData pd;
  std::vector<Sample> samples;
  std::vector<std::optional<Traj>> rho, rho11;
  std::map<std::vector<int>, std::vector<Traj>> gamma;

  Engine(const MinusculePoset& m, std::vector<Sample> s)
      : mp(m), p(m.poset), h(m.coxeter_number), pd(pairing_data(m.lie)), samples(std::move(s)),
        rho(samples.size()), rho11(samples.size()) {}

  const T& A(const Sample& s) const { return s.F[at(p.top())]; }
  const T& B(const Sample& s) const { return s.F[at(p.bottom())]; }
  T monomial(const Sample& s, long a, long b) const { return power(A(s), a) * power(B(s), b); }

  const Traj& rho_traj(std::size_t i) {
    if (!rho[i]) rho[i] = trajectory(samples[i].F, h, [&](const Labeling<T>& G) { return browmotion(p, G); });
    return *rho[i];
  }

  const Traj& rho11_traj(std::size_t i) {
    if (!rho11[i]) {
      Labeling<T> F = samples[i].F;
      F[at(p.top())] = one_like(F[0]);
      F[at(p.bottom())] = one_like(F[0]);
      rho11[i] = trajectory(F, h, [&](const Labeling<T>& G) { return browmotion(p, G); });
    }
    return *rho11[i];
  }

  const Traj& gamma_traj(std::size_t i, const std::vector<int>& order) {
    auto& per = gamma[order];
    if (per.empty()) per.resize(samples.size());
    if (per[i].empty())
      per[i] = trajectory(samples[i].Fx, h, [&](const Labeling<T>& G) {
        return coxeter_motion(mp, G, std::span<const int>(order));
      });
    return per[i];
  }

  // map^h = id on every sample, and map^d != id on some sample for every
  // maximal proper divisor d of h.
  template <class Get>
  void exact_order(Outcome& out, Get&& traj_of, const std::string& what) {
    const auto divisors = maximal_proper_divisors(h);
    std::vector<bool> moved(divisors.size(), false);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Traj& t = traj_of(i);
      for (int v = 0; v < p.size(); ++v) {
        ++out.checks;
        if (!(t[at(h)][at(v)] == t[0][at(v)]))
          out.fail(v, h, samples[i].point, what + "^h moves the value: " + show(t[at(h)][at(v)]));
      }
      for (std::size_t d = 0; d < divisors.size(); ++d)
        if (!(t[at(divisors[d])] == t[0])) moved[d] = true;
    }
    for (std::size_t d = 0; d < divisors.size(); ++d) {
      ++out.checks;
      if (!moved[d])
        out.fail(-1, divisors[d], "", what + "^" + std::to_string(divisors[d]) + " fixes every sampled state");
    }
  }

  Outcome periodicity() {
    Outcome out;
    exact_order(out, [&](std::size_t i) -> const Traj& { return rho_traj(i); }, "rho");
    return out;
  }

  Outcome reciprocity() {
    Outcome out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Traj& t = rho_traj(i);
      const T ab = A(samples[i]) * B(samples[i]);
      for (int v = 0; v < p.size(); ++v) {
        const int r = mp.rank[at(v)];
        ++out.checks;
        const T lhs = t[at(r)][at(v)] * t[0][at(mp.involution[at(v)])];
        if (!(lhs == ab)) out.fail(v, r, samples[i].point, "(rho^rank F)(v) * F(iota v) = " + show(lhs));
      }
    }
    return out;
  }

  // prod_k Phi_alpha(traj[k]) against A^{h<w,-w0 l>} B^{h<w,l>}.
  void homomesy(Outcome& out, const Sample& s, const Traj& t, const std::string& what) {
    for (int alpha = 1; alpha <= mp.lie.n; ++alpha) {
      T prod = one_like(s.F[0]);
      for (int k = 0; k < h; ++k) prod = prod * phi(mp, t[at(k)], alpha);
      const T expect = monomial(s, pd.a_exponent[at(alpha - 1)].get_si(), pd.b_exponent[at(alpha - 1)].get_si());
      ++out.checks;
      if (!(prod == expect)) out.fail(alpha, h, s.point, what + " file product for root " + std::to_string(alpha) + " = " + show(prod));
    }
  }

  Outcome file_homomesy() {
    Outcome out;
    for (std::size_t i = 0; i < samples.size(); ++i) homomesy(out, samples[i], rho_traj(i), "rowmotion");
    // The exponents must agree with the combinatorial orbit averages.
    const OrbitStats st = orbit_stats(mp);
    for (std::size_t o = 0; o < st.orbits.size(); ++o)
      for (int alpha = 1; alpha <= mp.lie.n; ++alpha) {
        ++out.checks;
        if (st.file_average[o][at(alpha - 1)] * h != Rational(pd.b_exponent[at(alpha - 1)]))
          out.fail(alpha, -1, "",
                   "orbit " + std::to_string(o) + " averages " + show(st.file_average[o][at(alpha - 1)]) +
                       " elements of file " + std::to_string(alpha));
      }
    return out;
  }

  Outcome coxeter_periodicity(const std::vector<std::vector<int>>& orders) {
    Outcome out;
    for (const auto& ord : orders) {
      std::string name = "gamma(";
      for (std::size_t k = 0; k < ord.size(); ++k) name += (k ? "," : "") + std::to_string(ord[k]);
      name += ")";
      exact_order(out, [&](std::size_t i) -> const Traj& { return gamma_traj(i, ord); }, name);
      if (out.witness) break;
    }
    return out;
  }

  Outcome coxeter_homomesy(const std::vector<std::vector<int>>& orders) {
    Outcome out;
    for (const auto& ord : orders)
      for (std::size_t i = 0; i < samples.size(); ++i) homomesy(out, samples[i], gamma_traj(i, ord), "Coxeter-motion");
    return out;
  }

  Outcome hopkins() {
    Outcome out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Traj& t = rho_traj(i);
      T prod = one_like(samples[i].F[0]);
      for (int k = 0; k < h; ++k) prod = prod * psi(p, t[at(k)]);
      const long n = p.size();
      ++out.checks;
      if (!(prod == monomial(samples[i], n, -n))) out.fail(-1, h, samples[i].point, "product of Psi = " + show(prod));
    }
    return out;
  }

  int color_of(int v) const { return mp.color[at(v)]; }

  Outcome rel_phi_prime() {
    Outcome out;
    const int amax = color_of(mp.maximum()), amin = color_of(mp.minimum());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Traj& t = rho_traj(i);
      for (int alpha = 1; alpha <= mp.lie.n; ++alpha) {
        const int v0 = mp.file(alpha).front();
        int reach = 1 + phi_prime_span(mp, alpha);
        for (int beta : mp.cartan.neighbors(alpha)) reach = std::max(reach, 1 + phi_prime_span(mp, beta));
        for (int k = 0; k + reach <= h; ++k) {
          const T lhs = phi_prime(mp, t, alpha, k) * phi_prime(mp, t, alpha, k + 1);
          T rhs = monomial(samples[i], alpha == amax ? 1 : 0, alpha == amin ? 1 : 0);
          for (int beta : mp.cartan.neighbors(alpha)) {
            const int m = p.less(v0, mp.file(beta).front()) ? 1 : 0;
            rhs = rhs * power(phi_prime(mp, t, beta, k + m), -mp.cartan.cartan(alpha, beta));
          }
          ++out.checks;
          if (!(lhs == rhs)) out.fail(alpha, k, samples[i].point, "Phi' relation fails for root " + std::to_string(alpha));
        }
      }
    }
    return out;
  }

  Outcome rel_phi() {
    Outcome out;
    const int amax = color_of(mp.maximum()), amin = color_of(mp.minimum());
    const int n = mp.lie.n;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Sample& s = samples[i];
      const Traj& t = rho_traj(i);
      std::vector<T> tilde;
      for (int beta = 1; beta <= n; ++beta) {
        T prod = one_like(s.F[0]);
        for (int k = 0; k < h; ++k) prod = prod * phi(mp, t[at(k)], beta);
        tilde.push_back(prod);
      }
      for (int alpha = 1; alpha <= n; ++alpha) {
        // Averaged relation: the exponents carry a factor h.
        T lhs = one_like(s.F[0]);
        for (int beta = 1; beta <= n; ++beta)
          if (int c = mp.cartan.cartan(alpha, beta)) lhs = lhs * power(tilde[at(beta - 1)], c);
        ++out.checks;
        if (!(lhs == monomial(s, alpha == amax ? h : 0, alpha == amin ? h : 0)))
          out.fail(alpha, h, s.point, "averaged file relation fails for root " + std::to_string(alpha));

        // One file toggle.
        const Labeling<T> sF = sigma(mp, s.Fx, alpha);
        T rhs = monomial(s, alpha == amax ? 1 : 0, alpha == amin ? 1 : 0);
        for (int beta : mp.cartan.neighbors(alpha)) rhs = rhs * power(phi(mp, s.Fx, beta), -mp.cartan.cartan(alpha, beta));
        ++out.checks;
        if (!(phi(mp, s.Fx, alpha) * phi(mp, sF, alpha) == rhs))
          out.fail(alpha, 1, s.point, "file toggle relation fails for root " + std::to_string(alpha));
        for (int beta = 1; beta <= n; ++beta) {
          if (beta == alpha) continue;
          ++out.checks;
          if (!(phi(mp, sF, beta) == phi(mp, s.Fx, beta)))
            out.fail(beta, 1, s.point, "toggling file " + std::to_string(alpha) + " changes file " + std::to_string(beta));
        }
      }
    }
    return out;
  }

  Outcome half_period() {
    Outcome out;
    for (const auto& s : samples) {
      const Labeling<T> dF = delta_map(mp, s.Fx);
      const T ab = A(s) * B(s);
      for (int v = 0; v < p.size(); ++v) {
        ++out.checks;
        const T lhs = dF[at(v)] * s.Fx[at(mp.involution[at(v)])];
        if (!(lhs == ab)) out.fail(v, h, s.point, "(delta F)(v) * F(iota v) = " + show(lhs));
      }
    }
    return out;
  }

  Outcome ab_reduction() {
    Outcome out;
    const int height = h - 1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Traj& t = rho_traj(i);
      const Traj& u = rho11_traj(i);
      for (int v = 0; v < p.size(); ++v) {
        const int r = mp.rank[at(v)];
        for (int k = 1; k <= height + 1; ++k) {
          long a = 0, b = 0;
          if (k <= r - 1)
            a = 1;
          else if (k == r)
            a = b = 1;
          else if (k <= height)
            b = 1;
          ++out.checks;
          if (!(t[at(k)][at(v)] == u[at(k)][at(v)] * monomial(samples[i], a, b)))
            out.fail(v, k, samples[i].point, "iterate differs from the unit-boundary iterate by more than the factor");
        }
      }
    }
    return out;
  }

  Outcome run(Theorem th, const std::vector<std::vector<int>>& orders) {
    switch (th) {
      case Theorem::periodicity: return periodicity();
      case Theorem::reciprocity: return reciprocity();
      case Theorem::file_homomesy: return file_homomesy();
      case Theorem::coxeter_periodicity: return coxeter_periodicity(orders);
      case Theorem::coxeter_homomesy: return coxeter_homomesy(orders);
      case Theorem::hopkins: return hopkins();
      case Theorem::rel_phi_prime: return rel_phi_prime();
      case Theorem::rel_phi: return rel_phi();
      case Theorem::half_period_conjecture: return half_period();
      case Theorem::ab_reduction: return ab_reduction();
    }
    throw std::logic_error("unknown theorem");
  }
};

std::string describe_point(const std::vector<Rational>& pt) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
  os << "]";
  return os.str();
}

}  // namespace

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& [t, name] : theorem_table()) v.push_back(t);
    return v;
  }();
  return all;
}

std::string theorem_name(Theorem t) {
  for (const auto& [x, name] : theorem_table())
    if (x == t) return name;
  throw std::logic_error("unknown theorem");
}

std::optional<Theorem> parse_theorem(const std::string& s) {
  for (const auto& [x, name] : theorem_table())
    if (s == name) return x;
  return std::nullopt;
}

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "prob"; }

Mode default_mode(const MinusculePoset& mp) { return mp.size() <= 16 ? Mode::exact : Mode::probabilistic; }

struct Verifier::Impl {
  std::variant<Engine<RatFun>, Engine<Rational>> engine;
};

Verifier::Verifier(const MinusculePoset& mp, VerifyOptions options) : mp_(mp), options_(options) {
  const int n = mp.lie.n;
  std::vector<int> ord(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord[at(i)] = i + 1;
  if (n <= 4) {
    do orderings_.push_back(ord);
    while (std::next_permutation(ord.begin(), ord.end()));
  } else {
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.random_orderings; ++k) {
      std::shuffle(ord.begin(), ord.end(), rng);
      orderings_.push_back(ord);
    }
  }

  if (options.mode == Mode::exact) {
    std::vector<Engine<RatFun>::Sample> s{{symbolic_labeling_z(mp.poset), symbolic_labeling(mp.poset), ""}};
    impl_ = std::make_unique<Impl>(Impl{Engine<RatFun>(mp, std::move(s))});
  } else {
    if (options.trials < 1) throw std::invalid_argument("probabilistic mode needs at least one trial");
    std::vector<Engine<Rational>::Sample> s;
    std::uint64_t state = options.seed;
    for (int t = 0; t < options.trials; ++t) {
      auto pt = random_point(state, mp.poset.hat_size());
      std::string desc = describe_point(pt);
      s.push_back({pt, pt, std::move(desc)});
    }
    impl_ = std::make_unique<Impl>(Impl{Engine<Rational>(mp, std::move(s))});
  }
}

Verifier::~Verifier() = default;

VerifyReport Verifier::run(Theorem t) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = std::visit([&](auto& e) { return e.run(t, orderings_); }, impl_->engine);
  VerifyReport rep;
  rep.poset = to_string(mp_.lie);
  rep.theorem = t;
  rep.mode = options_.mode;
  rep.pass = !out.witness;
  rep.seed = options_.seed;
  rep.trials = options_.mode == Mode::exact ? 0 : options_.trials;
  rep.checks = out.checks;
  rep.witness = out.witness;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerifyReport> verify(const MinusculePoset& mp, const std::vector<Theorem>& theorems,
                                 const VerifyOptions& options) {
  Verifier v(mp, options);
  std::vector<VerifyReport> out;
  for (Theorem t : theorems) out.push_back(v.run(t));
  return out;
}

}  // namespace rowmotion
