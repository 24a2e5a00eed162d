#include "rowmotion/export.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace rowmotion {

namespace {

using nlohmann::json;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string export_json(const MinusculePoset& mp) {
  json j;
  j["family"] = std::string(1, family_letter(mp.lie.family));
  j["n"] = mp.lie.n;
  j["weight"] = mp.lie.weight;
  j["coxeter_number"] = mp.coxeter_number;
  json elements = json::array();
  for (int v = 0; v < mp.size(); ++v)
    elements.push_back({{"id", v},
                        {"coord", {mp.coord[at(v)].first, mp.coord[at(v)].second}},
                        {"color", mp.color[at(v)]},
                        {"rank", mp.rank[at(v)]}});
  j["elements"] = std::move(elements);
  json covers = json::array();
  for (const auto& [lo, hi] : mp.poset.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  j["involution"] = mp.involution;
  return dump(j);
}

std::string export_dot(const MinusculePoset& mp) {
  std::ostringstream os;
  os << "digraph \"" << to_string(mp.lie) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  std::map<int, std::vector<int>> by_rank;
  for (int v = 0; v < mp.size(); ++v) {
    os << "  " << v << " [label=\"" << v << ":" << mp.color[at(v)] << "\"];\n";
    by_rank[mp.rank[at(v)]].push_back(v);
  }
  for (const auto& [r, vs] : by_rank) {
    os << "  { rank=same;";
    for (int v : vs) os << " " << v << ";";
    os << " }\n";
  }
  for (const auto& [lo, hi] : mp.poset.covers()) os << "  " << lo << " -> " << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<CatalogRow> catalog_rows(int max_rank) {
  std::vector<CatalogRow> rows;
  for (const auto& lie : legal_lie_types(max_rank)) {
    const auto mp = build_minuscule(lie);
    int ideals = 0;
    for_each_ideal(mp.poset, [&](const Ideal&) { ++ideals; });
    rows.push_back({lie, mp.size(), ideals, mp.coxeter_number});
  }
  return rows;
}

std::string catalog_text(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "type" << std::right << std::setw(6) << "#P" << std::setw(8) << "#J(P)"
     << std::setw(5) << "h" << "\n";
  for (const auto& r : rows)
    os << std::left << std::setw(10) << to_string(r.lie) << std::right << std::setw(6) << r.elements << std::setw(8)
       << r.ideals << std::setw(5) << r.coxeter_number << "\n";
  return os.str();
}

std::string catalog_json(const std::vector<CatalogRow>& rows) {
  json j = json::array();
  for (const auto& r : rows)
    j.push_back({{"family", std::string(1, family_letter(r.lie.family))},
                 {"n", r.lie.n},
                 {"weight", r.lie.weight},
                 {"elements", r.elements},
                 {"ideals", r.ideals},
                 {"coxeter_number", r.coxeter_number}});
  return dump(j);
}

std::string orbits_json(const MinusculePoset& mp, const OrbitStats& st) {
  json j;
  j["poset"] = to_string(mp.lie);
  j["ideals"] = st.ideal_count;
  j["order"] = st.order;
  j["coxeter_number"] = mp.coxeter_number;
  j["empty_orbit_length"] = st.empty_orbit_length;
  json orbits = json::array();
  for (std::size_t o = 0; o < st.orbits.size(); ++o) {
    json avg = json::array();
    for (const auto& q : st.file_average[o]) avg.push_back(q.get_str());
    orbits.push_back({{"representative", st.orbits[o].representative.members()},
                      {"length", st.orbits[o].members.size()},
                      {"file_average", std::move(avg)}});
  }
  j["orbits"] = std::move(orbits);
  return dump(j);
}

std::string orbits_text(const MinusculePoset& mp, const OrbitStats& st) {
  std::ostringstream os;
  os << to_string(mp.lie) << ": " << st.ideal_count << " ideals, " << st.orbits.size() << " orbits, order "
     << st.order << " (h = " << mp.coxeter_number << ")\n";
  for (std::size_t o = 0; o < st.orbits.size(); ++o) {
    os << "  orbit " << o << " length " << st.orbits[o].members.size() << " file averages";
    for (const auto& q : st.file_average[o]) os << " " << q;
    os << "\n";
  }
  return os.str();
}

std::string report_json(const std::vector<VerifyReport>& reports, bool include_timing) {
  json j = json::array();
  for (const auto& r : reports) {
    json rec = {{"poset", r.poset},
                {"theorem", theorem_name(r.theorem)},
                {"mode", mode_name(r.mode)},
                {"status", r.pass ? "PASS" : "FAIL"},
                {"seed", r.seed},
                {"trials", r.trials},
                {"checks", r.checks}};
    if (include_timing) rec["elapsed_ms"] = std::llround(r.elapsed_ms * 1000) / 1000.0;
    if (r.witness) {
      json w = {{"detail", r.witness->detail}};
      if (r.witness->vertex >= 0) w["vertex"] = r.witness->vertex;
      if (r.witness->iterate >= 0) w["iterate"] = r.witness->iterate;
      if (!r.witness->point.empty()) w["point"] = r.witness->point;
      rec["witness"] = std::move(w);
    }
    j.push_back(std::move(rec));
  }
  return dump(j);
}

}  // namespace rowmotion
