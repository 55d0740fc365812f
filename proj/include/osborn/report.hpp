#pragma once

#include <cstdint>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "osborn/check.hpp"
#include "osborn/cycles.hpp"
#include "osborn/mappings.hpp"
#include "osborn/properties.hpp"
#include "osborn/search.hpp"
#include "osborn/verifier.hpp"

namespace osborn {

using Json = nlohmann::ordered_json;

/// Printed beside every failure of a verification report.
inline constexpr std::string_view kContradictionMarker =
    "STATEMENT-CONTRADICTION: verify by independent recomputation";

inline std::string format_tuple(const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + ")";
}

inline Json element_list(const std::vector<Element>& v) {
  Json a = Json::array();
  for (Element x : v) a.push_back(static_cast<int>(x));
  return a;
}

inline Json to_json(const CheckResult& r) {
  Json j;
  j["holds"] = r.holds;
  j["triples_checked"] = r.checked;
  if (!r.holds) j["witness"] = element_list(r.witness);
  if (!r.clause.empty()) j["clause"] = r.clause;
  if (r.isotope) j["isotope"] = {static_cast<int>(r.isotope->first), static_cast<int>(r.isotope->second)};
  return j;
}

/// "holds" or "fails at (x, y, z)" plus clause and isotope when present.
inline std::string to_text(const CheckResult& r) {
  if (r.holds) return "holds";
  std::string s = "fails";
  if (!r.clause.empty()) s += " [" + r.clause + "]";
  if (!r.witness.empty()) s += " at " + format_tuple(r.witness);
  if (r.isotope) s += " in isotope (u, v) = " + format_tuple({r.isotope->first, r.isotope->second});
  return s;
}

inline Json to_json(const PropertyReport& p) {
  Json j;
  Json ids;
  for (const auto& [id, r] : p.results) ids[std::string(name(id))] = to_json(r);
  j["identities"] = ids;
  j["power_associative"] = to_json(p.power_associative);
  j["universal_wip"] = to_json(p.universal_wip);
  j["osborn"] = p.is_osborn;
  j["group"] = p.is_group;
  j["moufang"] = p.is_moufang;
  j["cc"] = p.is_cc;
  return j;
}

inline std::string to_text(const PropertyReport& p) {
  std::ostringstream out;
  for (const auto& [id, r] : p.results) out << name(id) << ": " << to_text(r) << '\n';
  out << "power associative: " << to_text(p.power_associative) << '\n';
  out << "universal WIP: " << to_text(p.universal_wip) << '\n';
  out << "osborn: " << (p.is_osborn ? "yes" : "no") << '\n';
  out << "group: " << (p.is_group ? "yes" : "no") << '\n';
  out << "moufang: " << (p.is_moufang ? "yes" : "no") << '\n';
  out << "cc: " << (p.is_cc ? "yes" : "no") << '\n';
  return out.str();
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["statement"] = std::string(name(r.statement));
  j["precondition"] = std::string(info(r.statement).precondition);
  j["pseudo_automorphism_convention"] = std::string(kPseudoAutConvention);
  j["catalog_digest"] = hex_digest(r.catalog_digest);
  j["loops_tested"] = r.loops_tested;
  j["loops_skipped"] = r.loops_skipped;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    fails.push_back({{"loop_digest", hex_digest(f.loop_digest)},
                     {"order", f.order},
                     {"clause", f.clause},
                     {"witness", element_list(f.witness)},
                     {"marker", std::string(kContradictionMarker)}});
  }
  j["failures"] = fails;
  return j;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "statement " << name(r.statement) << '\n';
  out << "precondition " << info(r.statement).precondition << '\n';
  out << "pseudo-automorphism convention " << kPseudoAutConvention << '\n';
  out << "catalog " << hex_digest(r.catalog_digest) << '\n';
  out << r.loops_tested << " tested, " << r.failures.size() << " failures\n";
  out << r.loops_skipped << " skipped\n";
  for (const auto& f : r.failures) {
    out << kContradictionMarker << ": loop " << hex_digest(f.loop_digest) << " (order " << f.order << ")";
    if (!f.clause.empty()) out << " [" << f.clause << "]";
    if (!f.witness.empty()) out << " at " << format_tuple(f.witness);
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const Battery& b) {
  Json a = Json::array();
  for (const auto& c : b) {
    Json j = to_json(c.result);
    j["label"] = c.label;
    a.push_back(j);
  }
  return a;
}

inline std::string to_text(const Battery& b) {
  std::ostringstream out;
  for (const auto& c : b) out << c.label << ": " << to_text(c.result) << '\n';
  return out.str();
}

inline Json to_json(const CycleDecomposition& d) {
  Json orbits = Json::array();
  for (const auto& o : d.orbits) orbits.push_back(element_list(o));
  Json lengths = Json::array();
  for (std::size_t x : d.lengths) lengths.push_back(x);
  return {{"orbits", orbits}, {"lengths", lengths}, {"longest", d.longest()}};
}

inline std::string to_text(const CycleDecomposition& d) {
  std::ostringstream out;
  for (const auto& o : d.orbits) {
    out << "(";
    for (std::size_t i = 0; i < o.size(); ++i) out << (i ? " " : "") << static_cast<int>(o[i]);
    out << ")";
  }
  out << "\nlengths";
  for (std::size_t x : d.lengths) out << ' ' << x;
  out << '\n';
  return out.str();
}

inline Json to_json(std::span<const CensusEntry> census) {
  Json a = Json::array();
  for (const auto& e : census) a.push_back({{"order", e.order}, {"length", e.length}, {"count", e.count}});
  return a;
}

/// Right-aligned columns: order, cycle length, count.
inline std::string to_text(std::span<const CensusEntry> census) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%6s %7s %10s\n", "order", "length", "count");
  out << buf;
  for (const auto& e : census) {
    std::snprintf(buf, sizeof buf, "%6zu %7zu %10zu\n", e.order, e.length, e.count);
    out << buf;
  }
  return out.str();
}

inline Json to_json(const Permutation& p) {
  Json a = Json::array();
  for (Element x : p.image()) a.push_back(static_cast<int>(x));
  return a;
}

/// Degree, generators and order.
inline Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

inline Json to_json(const Autotopism& t) { return {{"A", to_json(t.a())}, {"B", to_json(t.b())}, {"C", to_json(t.c())}}; }

inline Json table_json(const LoopTable& l) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < l.order(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < l.order(); ++y) row.push_back(static_cast<int>(l.mul(static_cast<Element>(x), static_cast<Element>(y))));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace osborn
