#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "osborn/loop.hpp"

namespace osborn {

/// Orbits of J_rho. Each orbit starts at its least element and lists
/// x, x^rho, x^rho^2, ...; orbits are ordered by least element.
struct CycleDecomposition {
  std::vector<std::vector<Element>> orbits;
  std::vector<std::size_t> lengths;  // sorted ascending

  std::size_t longest() const { return lengths.empty() ? 0 : lengths.back(); }
};

inline CycleDecomposition rho_cycles(const LoopTable& l) {
  CycleDecomposition d;
  d.orbits = j_map(l, Side::rho).cycles();
  for (const auto& o : d.orbits) d.lengths.push_back(o.size());
  std::sort(d.lengths.begin(), d.lengths.end());
  return d;
}

/// Histogram row: across the catalog, `count` inverse cycles of length
/// `length` occur in loops of order `order`.
struct CensusEntry {
  std::size_t order;
  std::size_t length;
  std::size_t count;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

inline std::vector<CensusEntry> cycle_census(std::span<const LoopTable> loops) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hist;
  for (const auto& l : loops) {
    for (std::size_t len : rho_cycles(l).lengths) ++hist[{l.order(), len}];
  }
  std::vector<CensusEntry> out;
  for (const auto& [key, count] : hist) out.push_back({key.first, key.second, count});
  return out;
}

}  // namespace osborn
