#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "osborn/error.hpp"

namespace osborn {

/// Loop elements are 0-based indices. 0xFF is reserved as "undefined" by the
/// partial-table machinery, so orders are capped at 255.
using Element = std::uint8_t;

inline constexpr Element kUndefined = 0xFF;
inline constexpr std::size_t kMaxOrder = 255;

/// A bijection on {0, ..., n-1}, acting on the right: x * (a * b) = (x a) b.
///
/// Composition follows postfix notation, so `a * b` applies `a` first and then
/// `b`. That is how translations compose in expressions such as y R_x R_{x^rho}.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `image` is a bijection.
  explicit Permutation(std::vector<Element> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Element v : image_) {
      if (v >= image_.size() || seen[v]) {
        throw Error("permutation image is not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), Element{0});
    return p;
  }

  /// Trusted constructor for images already known to be bijective.
  static Permutation unchecked(std::vector<Element> image) {
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }

  std::size_t degree() const noexcept { return image_.size(); }
  Element operator()(Element x) const { return image_[x]; }
  std::span<const Element> image() const noexcept { return image_; }

  Permutation inverse() const {
    std::vector<Element> inv(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = static_cast<Element>(x);
    return unchecked(std::move(inv));
  }

  bool is_identity() const noexcept {
    for (std::size_t x = 0; x < image_.size(); ++x) {
      if (image_[x] != x) return false;
    }
    return true;
  }

  bool fixes(Element x) const { return image_[x] == x; }

  /// Postfix composition: apply *this, then `next`.
  friend Permutation operator*(const Permutation& first, const Permutation& next) {
    if (first.degree() != next.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<Element> out(first.degree());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = next.image_[first.image_[x]];
    return unchecked(std::move(out));
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Permutation acc = identity(degree());
    while (e > 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  /// Disjoint cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Element>> cycles() const {
    std::vector<std::vector<Element>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
      if (seen[start]) continue;
      std::vector<Element> cyc;
      for (Element x = static_cast<Element>(start); !seen[x]; x = image_[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Sorted multiset of cycle lengths.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles()) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::size_t order() const {
    std::size_t acc = 1;
    for (std::size_t len : cycle_type()) acc = std::lcm(acc, len);
    return acc;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(image_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> image_;
};

/// Commutator [a, b] = a^-1 b^-1 a b in postfix order.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Element v : p.image()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace osborn
