// rowmotion: catalog listing, poset export, orbit statistics and identity
// verification for minuscule posets.
//
// Exit codes: 0 success (every selected check passed), 1 some check failed,
// 2 configuration or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rowmotion/catalog.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/export.hpp"
#include "rowmotion/verify.hpp"

namespace {

using namespace rowmotion;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct PosetArgs {
  std::string type;
  int n = 0;
  int weight = 0;
};

void add_poset_options(CLI::App* app, PosetArgs& a) {
  app->add_option("--type", a.type, "Lie family")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
  app->add_option("--n", a.n, "rank")->required();
  app->add_option("--weight", a.weight, "minuscule fundamental weight index")->required();
}

MinusculePoset load(const PosetArgs& a) {
  LieType lie{parse_family(a.type), a.n, a.weight};
  require_legal(lie);
  return build_minuscule(lie);
}

// Writes to `path`, or stdout when empty. Throws on I/O failure.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rowmotion and Coxeter-motion on minuscule posets"};
  app.require_subcommand(1);

  int max_rank = 7;
  std::string catalog_format = "text", catalog_out;
  auto* catalog = app.add_subcommand("catalog", "list every legal (family, n, weight) with #P, #J(P), h");
  catalog->add_option("--max-rank", max_rank, "largest rank listed")->check(CLI::Range(1, 30));
  catalog->add_option("--format", catalog_format)->check(CLI::IsMember({"text", "json"}));
  catalog->add_option("--out", catalog_out, "output file (default stdout)");

  PosetArgs export_args;
  std::string export_format = "json", export_out;
  auto* exp = app.add_subcommand("export", "write a poset as JSON or Graphviz DOT");
  add_poset_options(exp, export_args);
  exp->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", export_out, "output file (default stdout)");

  PosetArgs orbit_args;
  std::string orbit_format = "text", orbit_out;
  auto* orbits = app.add_subcommand("orbits", "orbits of combinatorial rowmotion and file averages");
  add_poset_options(orbits, orbit_args);
  orbits->add_option("--format", orbit_format)->check(CLI::IsMember({"text", "json"}));
  orbits->add_option("--out", orbit_out, "output file (default stdout)");

  PosetArgs verify_args;
  std::vector<std::string> theorem_names;
  bool all = false, no_timing = false;
  std::string mode_str, verify_out;
  std::uint64_t seed = 1;
  int trials = 20;
  auto* ver = app.add_subcommand("verify", "check the birational identities on one poset");
  add_poset_options(ver, verify_args);
  auto* th = ver->add_option("--theorem", theorem_names, "theorem name (repeatable)");
  auto* al = ver->add_flag("--all", all, "every theorem");
  th->excludes(al);
  ver->add_option("--mode", mode_str, "exact or prob (default: exact up to 16 elements)")
      ->check(CLI::IsMember({"exact", "prob"}));
  ver->add_option("--seed", seed, "seed for sample points and Coxeter orderings");
  ver->add_option("--trials", trials, "sample points in prob mode")->check(CLI::PositiveNumber);
  ver->add_option("--out", verify_out, "JSON report file (default stdout)");
  ver->add_flag("--no-timing", no_timing, "omit elapsed_ms from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*catalog) {
      auto rows = catalog_rows(max_rank);
      emit(catalog_out, catalog_format == "json" ? catalog_json(rows) : catalog_text(rows));
      return 0;
    }
    if (*exp) {
      auto mp = load(export_args);
      emit(export_out, export_format == "json" ? export_json(mp) : export_dot(mp));
      return 0;
    }
    if (*orbits) {
      auto mp = load(orbit_args);
      auto st = orbit_stats(mp);
      emit(orbit_out, orbit_format == "json" ? orbits_json(mp, st) : orbits_text(mp, st));
      return 0;
    }
    if (*ver) {
      auto mp = load(verify_args);
      std::vector<Theorem> theorems;
      if (all || theorem_names.empty()) {
        if (!all) throw std::invalid_argument("give --theorem NAME or --all");
        theorems = all_theorems();
      }
      for (const auto& name : theorem_names) {
        auto t = parse_theorem(name);
        if (!t) throw std::invalid_argument("unknown theorem " + name);
        theorems.push_back(*t);
      }
      VerifyOptions opt;
      opt.mode = mode_str.empty() ? default_mode(mp) : (mode_str == "exact" ? Mode::exact : Mode::probabilistic);
      opt.seed = seed;
      opt.trials = trials;
      auto reports = verify(mp, theorems, opt);
      const std::string json = report_json(reports, !no_timing);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.pass;
      emit(verify_out, json);
      if (!verify_out.empty() && verify_out != "-")
        for (const auto& r : reports)
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.poset << " " << theorem_name(r.theorem) << " ("
                    << mode_name(r.mode) << ", " << r.checks << " checks)\n";
      return ok ? 0 : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
