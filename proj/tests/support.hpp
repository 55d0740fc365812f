#pragma once

#include <map>
#include <string>
#include <vector>

#include "osborn/osborn.hpp"

namespace support {

using namespace osborn;

inline std::string data_path(const std::string& name) { return std::string(OSBORN_DATA_DIR) + "/" + name; }

/// Every loop of order n, cached per process.
inline const std::vector<LoopTable>& all_loops(std::size_t n) {
  static std::map<std::size_t, std::vector<LoopTable>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_loops(n).loops).first;
  return it->second;
}

inline std::vector<LoopTable> loops_upto(std::size_t n) {
  std::vector<LoopTable> out;
  for (std::size_t k = 1; k <= n; ++k) out.insert(out.end(), all_loops(k).begin(), all_loops(k).end());
  return out;
}

inline std::vector<LoopTable> osborn_upto(std::size_t n) {
  std::vector<LoopTable> out;
  for (const auto& l : loops_upto(n))
    if (is_osborn(l).holds) out.push_back(l);
  return out;
}

/// First order-5 loop in enumeration order that is not Osborn.
inline LoopTable non_osborn5() {
  for (const auto& l : all_loops(5))
    if (!is_osborn(l).holds) return l;
  throw Error("no non-Osborn loop of order 5");
}

inline LoopTable first_nonassoc5() {
  for (const auto& l : all_loops(5))
    if (!holds(l, IdentityId::ASSOC)) return l;
  throw Error("no nonassociative loop of order 5");
}

inline LoopTable z(std::size_t n) { return cyclic_group(n); }

inline LoopTable s3() { return dihedral_group(3); }

}  // namespace support
