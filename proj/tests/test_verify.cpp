#include <algorithm>
#include <set>

#include "doctest.h"
#include "rowmotion/catalog.hpp"
#include "rowmotion/export.hpp"
#include "rowmotion/verify.hpp"

using namespace rowmotion;

TEST_CASE("theorem names") {
  CHECK(all_theorems().size() == 10);
  for (Theorem t : all_theorems()) CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK_FALSE(parse_theorem("nonsense"));
  CHECK(mode_name(Mode::exact) == "exact");
  CHECK(mode_name(Mode::probabilistic) == "prob");
  CHECK(default_mode(build_minuscule({Family::E, 6, 6})) == Mode::exact);
  CHECK(default_mode(build_minuscule({Family::E, 7, 7})) == Mode::probabilistic);
}

TEST_CASE("all theorems pass on small posets in both modes") {
  for (const auto& lie : {LieType{Family::A, 3, 2}, LieType{Family::A, 2, 1}, LieType{Family::A, 1, 1},
                          LieType{Family::C, 3, 1}, LieType{Family::D, 4, 1}, LieType{Family::B, 3, 3}}) {
    const auto mp = build_minuscule(lie);
    for (Mode m : {Mode::exact, Mode::probabilistic}) {
      VerifyOptions opt;
      opt.mode = m;
      opt.trials = 5;
      for (const auto& r : verify(mp, all_theorems(), opt)) {
        CAPTURE(r.poset);
        CAPTURE(theorem_name(r.theorem));
        CHECK(r.pass);
        CHECK_FALSE(r.witness);
        CHECK(r.checks > 0);
        CHECK(r.mode == m);
        CHECK(r.trials == (m == Mode::exact ? 0 : 5));
      }
    }
  }
}

TEST_CASE("a wrong period is caught with a witness") {
  auto mp = build_minuscule({Family::A, 3, 2});
  mp.coxeter_number = 5;
  for (Mode m : {Mode::exact, Mode::probabilistic}) {
    VerifyOptions opt;
    opt.mode = m;
    opt.trials = 3;
    Verifier v(mp, opt);
    const auto r = v.run(Theorem::periodicity);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness);
    CHECK(r.witness->detail != "");
    CHECK((m == Mode::exact) == r.witness->point.empty());
  }
}

TEST_CASE("a period that is a multiple of h is not accepted as exact") {
  auto mp = build_minuscule({Family::A, 2, 1});
  // rho^6 = id holds, but rho^3 already is the identity
  mp.coxeter_number = 6;
  VerifyOptions opt;
  Verifier v(mp, opt);
  CHECK_FALSE(v.run(Theorem::periodicity).pass);
}

TEST_CASE("Coxeter orderings") {
  const auto a4 = build_minuscule({Family::A, 4, 2});
  Verifier v4(a4, VerifyOptions{});
  CHECK(v4.orderings().size() == 24);
  std::set<std::vector<int>> distinct(v4.orderings().begin(), v4.orderings().end());
  CHECK(distinct.size() == 24);

  const auto e6 = build_minuscule({Family::E, 6, 6});
  VerifyOptions opt;
  opt.seed = 3;
  Verifier a(e6, opt), b(e6, opt);
  CHECK(a.orderings().size() == 5);
  CHECK(a.orderings() == b.orderings());
  for (auto o : a.orderings()) {
    std::sort(o.begin(), o.end());
    CHECK(o == std::vector<int>{1, 2, 3, 4, 5, 6});
  }
}

TEST_CASE("E7 Hopkins and periodicity by sampling") {
  const auto mp = build_minuscule({Family::E, 7, 7});
  VerifyOptions opt;
  opt.mode = Mode::probabilistic;
  opt.seed = 1;
  opt.trials = 20;
  for (const auto& r : verify(mp, {Theorem::hopkins, Theorem::periodicity, Theorem::reciprocity}, opt)) {
    CAPTURE(theorem_name(r.theorem));
    CHECK(r.pass);
    CHECK(r.seed == 1);
    CHECK(r.trials == 20);
  }
}

TEST_CASE("reports are reproducible") {
  const auto mp = build_minuscule({Family::D, 4, 4});
  VerifyOptions opt;
  opt.mode = Mode::probabilistic;
  opt.seed = 9;
  opt.trials = 4;
  const auto a = report_json(verify(mp, all_theorems(), opt), false);
  const auto b = report_json(verify(mp, all_theorems(), opt), false);
  CHECK(a == b);
  CHECK(a.find("elapsed_ms") == std::string::npos);
  CHECK(report_json(verify(mp, {Theorem::hopkins}, opt), true).find("elapsed_ms") != std::string::npos);
}
