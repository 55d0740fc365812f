#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <unordered_set>
#include <vector>

#include "osborn/error.hpp"
#include "osborn/permutation.hpp"

namespace osborn {

/// Default closure bound: 10! elements.
inline constexpr std::size_t kDefaultClosureBound = 3628800;

/// A finite permutation group materialized by closure over its generators.
class PermGroup {
 public:
  /// Breadth-first closure: right-multiply every element by every generator
  /// until nothing new appears. In a finite group this also yields inverses.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t bound = kDefaultClosureBound) {
    PermGroup g;
    g.degree_ = degree;
    for (const auto& p : generators) {
      if (p.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    }
    // Drop duplicate and identity generators; they do not change the closure.
    std::unordered_set<Permutation, PermutationHash> seen_gen;
    for (auto& p : generators) {
      if (!p.is_identity() && seen_gen.insert(p).second) g.generators_.push_back(std::move(p));
    }

    Permutation id = Permutation::identity(degree);
    g.index_.insert(id);
    g.elements_.push_back(std::move(id));
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      for (const auto& s : g.generators_) {
        Permutation p = g.elements_[i] * s;
        if (g.index_.insert(p).second) {
          g.elements_.push_back(std::move(p));
          if (g.elements_.size() > bound) throw ClosureBoundExceeded(g.elements_.size(), bound);
        }
      }
    }
    return g;
  }

  /// Subgroup of elements satisfying `keep`; the caller guarantees closure.
  PermGroup filtered(const std::function<bool(const Permutation&)>& keep) const {
    PermGroup g;
    g.degree_ = degree_;
    for (const auto& p : elements_) {
      if (keep(p)) {
        g.index_.insert(p);
        g.elements_.push_back(p);
      }
    }
    // The kept set is its own generating set; trim to a small one greedily.
    PermGroup span;
    span.degree_ = degree_;
    span.elements_.push_back(Permutation::identity(degree_));
    span.index_.insert(span.elements_.front());
    for (const auto& p : g.elements_) {
      if (span.contains(p)) continue;
      std::vector<Permutation> gens = span.generators_;
      gens.push_back(p);
      span = generate(degree_, std::move(gens));
    }
    g.generators_ = span.generators_;
    return g;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  /// Same underlying set of permutations.
  bool same_elements(const PermGroup& other) const {
    if (order() != other.order()) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return other.contains(p); });
  }

  /// Stabilizer of a point.
  PermGroup stabilizer(Element x) const {
    return filtered([x](const Permutation& p) { return p.fixes(x); });
  }

  /// Closed under composition and inversion, and contains the identity.
  bool is_closed() const {
    if (!contains(Permutation::identity(degree_))) return false;
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const auto& b : elements_) {
        if (!contains(a * b)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> index_;
};

}  // namespace osborn
