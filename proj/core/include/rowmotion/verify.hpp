#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rowmotion/catalog.hpp"

namespace rowmotion {

enum class Theorem {
  periodicity,
  reciprocity,
  file_homomesy,
  coxeter_periodicity,
  coxeter_homomesy,
  hopkins,
  rel_phi_prime,
  rel_phi,
  half_period_conjecture,
  ab_reduction,
};

const std::vector<Theorem>& all_theorems();
std::string theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(const std::string& s);

enum class Mode { exact, probabilistic };
std::string mode_name(Mode m);

/// Exact (symbolic) up to 16 elements, probabilistic beyond.
Mode default_mode(const MinusculePoset& mp);

struct VerifyOptions {
  Mode mode = Mode::exact;
  std::uint64_t seed = 1;
  int trials = 20;            // probabilistic mode only
  int random_orderings = 5;   // Coxeter orderings when the rank exceeds 4
};

struct Witness {
  int vertex = -1;    // element index, or simple root for per-file checks
  int iterate = -1;
  std::string point;  // probabilistic sample, empty in exact mode
  std::string detail;
};

struct VerifyReport {
  std::string poset;  // e.g. "E7 w7"
  Theorem theorem = Theorem::periodicity;
  Mode mode = Mode::exact;
  bool pass = false;
  std::uint64_t seed = 0;
  int trials = 0;
  double elapsed_ms = 0;
  int checks = 0;  // number of individual identities compared
  std::optional<Witness> witness;
};

/// Runs the identity checks of one poset. Iterates of rowmotion and of the
/// Coxeter-motion maps are computed once and shared between theorems.
class Verifier {
 public:
  Verifier(const MinusculePoset& mp, VerifyOptions options);
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  VerifyReport run(Theorem t);

  /// Orderings of the simple roots used by the Coxeter-motion checks.
  const std::vector<std::vector<int>>& orderings() const { return orderings_; }

 private:
  struct Impl;
  const MinusculePoset& mp_;
  VerifyOptions options_;
  std::vector<std::vector<int>> orderings_;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper: one Verifier, every requested theorem.
std::vector<VerifyReport> verify(const MinusculePoset& mp, const std::vector<Theorem>& theorems,
                                 const VerifyOptions& options);

}  // namespace rowmotion
