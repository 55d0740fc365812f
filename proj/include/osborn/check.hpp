#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osborn/error.hpp"
#include "osborn/permutation.hpp"
#include "osborn/table.hpp"

namespace osborn {

/// Verdict of an exhaustive check. On failure `witness` holds the first
/// counterexample in scan order (last variable fastest).
struct CheckResult {
  bool holds = true;
  std::vector<Element> witness;
  std::uint64_t checked = 0;
  /// Set by isotope scans: the (u, v) of the failing principal isotope.
  std::optional<std::pair<Element, Element>> isotope;
  /// Which clause of a compound check failed, empty otherwise.
  std::string clause;

  explicit operator bool() const noexcept { return holds; }

  static CheckResult fail(std::vector<Element> w, std::uint64_t checked) {
    return CheckResult{false, std::move(w), checked, std::nullopt, {}};
  }
  static CheckResult fail(std::string clause, std::vector<Element> w, std::uint64_t checked) {
    CheckResult r = fail(std::move(w), checked);
    r.clause = std::move(clause);
    return r;
  }
  static CheckResult pass(std::uint64_t checked) { return CheckResult{true, {}, checked, std::nullopt, {}}; }
};

/// xA . yB = (x.y)C for all x, y.
inline CheckResult is_autotopism(const LoopTable& l, const Permutation& a, const Permutation& b, const Permutation& c) {
  const std::size_t n = l.order();
  if (a.degree() != n || b.degree() != n || c.degree() != n) {
    throw DegreeMismatch("autotopism components must have degree " + std::to_string(n));
  }
  std::uint64_t checked = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++checked;
      const auto ex = static_cast<Element>(x);
      const auto ey = static_cast<Element>(y);
      if (l.mul(a(ex), b(ey)) != c(l.mul(ex, ey))) return CheckResult::fail({ex, ey}, checked);
    }
  }
  return CheckResult::pass(checked);
}

}  // namespace osborn
