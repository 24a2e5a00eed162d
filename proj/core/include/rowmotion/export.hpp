#pragma once

#include <string>
#include <vector>

#include "rowmotion/catalog.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/verify.hpp"

namespace rowmotion {

/// {"family","n","weight","elements":[{"id","coord","color","rank"}],
///  "covers":[[lo,hi]],"involution":[...],"coxeter_number":h}
/// Keys are sorted and the output is byte-stable for a fixed input.
std::string export_json(const MinusculePoset& mp);

/// Hasse diagram bottom to top; node labels "index:color", one rank per row.
std::string export_dot(const MinusculePoset& mp);

struct CatalogRow {
  LieType lie;
  int elements = 0;
  int ideals = 0;
  int coxeter_number = 0;
};

std::vector<CatalogRow> catalog_rows(int max_rank);
std::string catalog_text(const std::vector<CatalogRow>& rows);
std::string catalog_json(const std::vector<CatalogRow>& rows);

/// Orbit lengths, file averages and order of combinatorial rowmotion.
std::string orbits_json(const MinusculePoset& mp, const OrbitStats& st);
std::string orbits_text(const MinusculePoset& mp, const OrbitStats& st);

/// One record per report: {poset, theorem, mode, status, seed, trials,
/// elapsed_ms, checks, witness?}. With include_timing false the elapsed_ms
/// field is dropped, which makes the output reproducible.
std::string report_json(const std::vector<VerifyReport>& reports, bool include_timing = true);

}  // namespace rowmotion
