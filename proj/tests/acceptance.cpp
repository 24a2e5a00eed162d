// Acceptance suite: one PASS/FAIL line per criterion with its pinned limit.
// Exit status is nonzero when any criterion other than the half-period
// evidence report fails; that one is an open question and a FAIL there is a
// finding, not a defect.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rowmotion/birational.hpp"
#include "rowmotion/catalog.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/oracles.hpp"
#include "rowmotion/piecewise_linear.hpp"
#include "rowmotion/verify.hpp"

using namespace rowmotion;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::size_t at(int i) { return static_cast<std::size_t>(i); }

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& what) {
    if (pass) note = what;
    pass = false;
  }
};

bool g_all_required_pass = true;

void report(int id, const std::string& title, const Outcome& o, double secs, const std::string& limit,
            bool required = true) {
  std::printf("[%s] criterion %2d  %-44s %8.2f s  (limit %s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              secs, limit.c_str(), o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
  if (required && !o.pass) g_all_required_pass = false;
}

std::vector<LieType> combinatorial_list() {
  std::vector<LieType> out;
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r) out.push_back({Family::A, n, r});
  out.push_back({Family::B, 4, 4});
  out.push_back({Family::C, 4, 1});
  for (int n : {4, 5})
    for (int r : {1, n - 1, n}) out.push_back({Family::D, n, r});
  out.push_back({Family::E, 6, 1});
  out.push_back({Family::E, 6, 6});
  out.push_back({Family::E, 7, 7});
  return out;
}

int ideal_count(const Poset& p) {
  int c = 0;
  for_each_ideal(p, [&](const Ideal&) { ++c; });
  return c;
}

std::vector<int> maximal_proper_divisors(int h) {
  std::vector<int> out;
  for (int q = 2; q <= h; ++q) {
    bool prime = true;
    for (int d = 2; d * d <= q; ++d) prime = prime && q % d;
    if (prime && h % q == 0) out.push_back(h / q);
  }
  return out;
}

// Birational results, computed once per poset and shared by criteria 3-7,
// 10 and 11.
struct TheoremResult {
  bool pass = true;
  double ms = 0;
  std::string note;
};

struct PosetRun {
  MinusculePoset mp;
  Mode mode;
  std::map<Theorem, TheoremResult> results;
  double wall = 0;  // all theorems, including the shared iterates
};

std::vector<PosetRun> run_birational() {
  std::vector<PosetRun> runs;
  for (const auto& lie : legal_lie_types(7)) {
    auto mp = build_minuscule(lie);
    const Mode mode = default_mode(mp);
    // exact on everything up to 16 elements; E7 by sampling
    if (mode == Mode::probabilistic && lie.family != Family::E) continue;
    runs.push_back({std::move(mp), mode, {}});
  }
  for (auto& run : runs) {
    VerifyOptions opt;
    opt.mode = run.mode;
    opt.seed = 1;
    opt.trials = 20;
    const auto t0 = Clock::now();
    Verifier v(run.mp, opt);
    std::vector<Theorem> theorems = all_theorems();
    for (Theorem t : theorems) {
      if (t == Theorem::ab_reduction && run.mp.size() > 10) continue;
      const auto r = v.run(t);
      TheoremResult tr{r.pass, r.elapsed_ms, ""};
      if (!r.pass && r.witness) tr.note = r.poset + " " + theorem_name(t) + ": " + r.witness->detail;
      run.results[t] = tr;
    }
    run.wall = seconds_since(t0);
  }
  return runs;
}

Outcome collect(const std::vector<PosetRun>& runs, std::initializer_list<Theorem> ts, double& secs) {
  Outcome o;
  secs = 0;
  int checked = 0;
  for (const auto& run : runs)
    for (Theorem t : ts) {
      auto it = run.results.find(t);
      if (it == run.results.end()) continue;
      ++checked;
      secs += it->second.ms / 1000;
      if (!it->second.pass) o.fail(it->second.note.empty() ? to_string(run.mp.lie) : it->second.note);
    }
  if (o.pass) o.note = std::to_string(checked) + " poset/theorem runs";
  return o;
}

}  // namespace

int main() {
  const auto lists = combinatorial_list();

  // 1. Combinatorial periodicity, order exactly h.
  {
    const auto t0 = Clock::now();
    Outcome o;
    for (const auto& lie : lists) {
      const auto mp = build_minuscule(lie);
      const int h = mp.coxeter_number;
      const auto st = orbit_stats(mp);
      if (st.order != h) o.fail(to_string(lie) + ": order " + std::to_string(st.order));
      const auto divisors = maximal_proper_divisors(h);
      std::vector<bool> moved(divisors.size(), false);
      for (const auto& I : enumerate_ideals(mp.poset)) {
        Ideal J = I;
        for (int k = 1; k <= h; ++k) {
          J = rowmotion::rowmotion(mp.poset, J);
          for (std::size_t d = 0; d < divisors.size(); ++d)
            if (k == divisors[d] && !(J == I)) moved[d] = true;
        }
        if (!(J == I)) o.fail(to_string(lie) + ": R^h(I) != I");
      }
      for (bool m : moved)
        if (!m) o.fail(to_string(lie) + ": a proper divisor of h is a period");
    }
    const double secs = seconds_since(t0);
    if (secs >= 10) o.fail("over time");
    if (o.pass) o.note = std::to_string(lists.size()) + " posets";
    report(1, "combinatorial periodicity", o, secs, "10 s");
  }

  // 2. Combinatorial file homomesy, exact rationals.
  {
    const auto t0 = Clock::now();
    Outcome o;
    for (const auto& lie : lists) {
      const auto mp = build_minuscule(lie);
      const auto pd = pairing_data(lie);
      for (const auto& orbit : rowmotion_orbits(mp.poset))
        for (int alpha = 1; alpha <= lie.n; ++alpha) {
          long total = 0;
          for (const auto& I : orbit.members)
            for (int v : mp.file(alpha)) total += I.contains(v);
          if (make_rational(total, static_cast<long>(orbit.members.size())) != pd.lambda[at(alpha - 1)])
            o.fail(to_string(lie) + " alpha " + std::to_string(alpha));
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10) o.fail("over time");
    if (o.pass) o.note = std::to_string(lists.size()) + " posets";
    report(2, "combinatorial file homomesy", o, secs, "10 s");
  }

  const auto t_bir = Clock::now();
  const auto runs = run_birational();
  std::printf("birational runs: %zu posets in %.2f s, shared by criteria 3-7, 10 and 11\n", runs.size(),
              seconds_since(t_bir));

  // 3. Birational periodicity, E7 sampled in under a minute.
  {
    double secs = 0, prob = 0;
    auto o = collect(runs, {Theorem::periodicity}, secs);
    // charge every theorem on the sampled posets, not just this one
    for (const auto& run : runs)
      if (run.mode == Mode::probabilistic) prob += run.wall;
    if (prob >= 60) o.fail("E7 sampling took " + std::to_string(prob) + " s");
    report(3, "birational periodicity", o, secs, "E7 prob 60 s");
  }
  {
    double secs = 0;
    report(4, "reciprocity", collect(runs, {Theorem::reciprocity}, secs), secs, "exact / prob");
  }
  {
    double secs = 0;
    report(5, "birational file homomesy", collect(runs, {Theorem::file_homomesy}, secs), secs, "exact / prob");
  }
  {
    double secs = 0;
    report(6, "Coxeter-motion periodicity and homomesy",
           collect(runs, {Theorem::coxeter_periodicity, Theorem::coxeter_homomesy}, secs), secs, "exact / prob");
  }
  {
    double secs = 0;
    report(7, "Hopkins product", collect(runs, {Theorem::hopkins}, secs), secs, "exact / prob");
  }

  // 8. Oracle equivalences.
  {
    const auto t0 = Clock::now();
    Outcome o;
    for (int n = 4; n <= 6; ++n) {
      const auto rep = diamond_check(build_minuscule({Family::D, n, 1}));
      if (!rep.ok) o.fail("diamond D" + std::to_string(n) + ": " + rep.counterexample);
    }
    for (int r = 1; r <= 3; ++r) {
      const auto rep = doubling_check(r, EqualityMode{true, 1, 0});
      if (!rep.ok) o.fail("doubling r=" + std::to_string(r) + ": " + rep.counterexample);
    }
    int local = 0;
    for (const auto& lie : legal_lie_types(7)) {
      const auto mp = build_minuscule(lie);
      if (mp.size() > 16) continue;
      for (int alpha = 1; alpha <= lie.n; ++alpha, ++local) {
        const auto rep = local_identity_check(mp, alpha, EqualityMode{true, 1, 0});
        if (!rep.ok) o.fail(to_string(lie) + " local alpha " + std::to_string(alpha) + ": " + rep.counterexample);
      }
    }
    // 2-chain, worked by hand
    {
      const auto mp = build_minuscule({Family::A, 2, 1});
      const auto& p = mp.poset;
      const auto F = symbolic_labeling(p);
      const auto u = RatFun::variable(0), w = RatFun::variable(1);
      const auto A = RatFun::variable(p.top()), B = RatFun::variable(p.bottom());
      const auto R1 = browmotion(p, F), R2 = browmotion(p, R1);
      if (!(R1[1] == A * u / w && R1[0] == A * B / w && R2[1] == A * B / u && R2[0] == B * w / u))
        o.fail("2-chain table");
    }
    if (o.pass) o.note = "D4-D6 diamond, staircase r<=3, " + std::to_string(local) + " local files, 2-chain";
    report(8, "oracle equivalences", o, seconds_since(t0), "exact");
  }

  // 9. PL bridge on every catalog poset with at most 56 ideals.
  {
    const auto t0 = Clock::now();
    Outcome o;
    int count = 0;
    for (const auto& lie : legal_lie_types(7)) {
      const auto mp = build_minuscule(lie);
      if (ideal_count(mp.poset) > 56) continue;
      ++count;
      const auto rep = bridge_check(mp, 1, 100);
      if (!rep.ok()) o.fail(to_string(lie) + ": " + rep.counterexample);
    }
    if (o.pass) o.note = std::to_string(count) + " posets";
    report(9, "PL bridge to combinatorial rowmotion", o, seconds_since(t0), "exact");
  }
  {
    double secs = 0;
    report(10, "A = B = 1 reduction table", collect(runs, {Theorem::ab_reduction}, secs), secs, "exact, <= 10 elements");
  }
  {
    double secs = 0;
    report(11, "half-period conjecture (evidence)", collect(runs, {Theorem::half_period_conjecture}, secs), secs,
           "report only", false);
  }

  // 12. Symbolic rho^12 = id on E6 from scratch.
  {
    const auto t0 = Clock::now();
    Outcome o;
    const auto mp = build_minuscule({Family::E, 6, 6});
    const auto F = symbolic_labeling_z(mp.poset);
    auto G = F;
    for (int k = 0; k < mp.coxeter_number; ++k) G = browmotion(mp.poset, G);
    if (!(G == F)) o.fail("rho^12 != id");
    const double secs = seconds_since(t0);
    if (secs >= 600) o.fail("over time");
    report(12, "E6 exact symbolic rho^12 = id", o, secs, "600 s");
  }

  std::printf("%s\n", g_all_required_pass ? "acceptance: PASS" : "acceptance: FAIL");
  return g_all_required_pass ? 0 : 1;
}
