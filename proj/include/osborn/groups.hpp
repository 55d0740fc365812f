#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "osborn/table.hpp"

namespace osborn {

/// Builds a canonical loop from an operation on {0..n-1} whose identity is 0.
inline LoopTable loop_from_operation(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) cells[x * n + y] = static_cast<Element>(op(x, y));
  return LoopTable::from_cells(n, std::move(cells));
}

inline LoopTable cyclic_group(std::size_t n) {
  return loop_from_operation(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; });
}

/// (a, b) is encoded as a * |B| + b.
inline LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const std::size_t m = b.order();
  return loop_from_operation(a.order() * m, [&](std::size_t x, std::size_t y) {
    return static_cast<std::size_t>(a.mul(static_cast<Element>(x / m), static_cast<Element>(y / m))) * m +
           b.mul(static_cast<Element>(x % m), static_cast<Element>(y % m));
  });
}

inline LoopTable klein_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

/// Dihedral group of order 2k; s^f r^i is encoded as f*k + i.
inline LoopTable dihedral_group(std::size_t k) {
  return loop_from_operation(2 * k, [k](std::size_t x, std::size_t y) {
    const std::size_t f = x / k, i = x % k, g = y / k, j = y % k;
    // r^i s = s r^-i
    const std::size_t rot = (g ? (k - i) % k : i) + j;
    return ((f + g) % 2) * k + rot % k;
  });
}

/// Quaternion group as the dicyclic group <a, b | a^4, b^2 = a^2, b a b^-1 = a^-1>;
/// a^i b^f is encoded as f*4 + i.
inline LoopTable quaternion_group() {
  return loop_from_operation(8, [](std::size_t x, std::size_t y) -> std::size_t {
    const std::size_t f = x / 4, i = x % 4, g = y / 4, j = y % 4;
    if (f == 0) return g * 4 + (i + j) % 4;
    const std::size_t a = (i + 4 - j) % 4;
    if (g == 0) return 4 + a;
    return (a + 2) % 4;  // b b = a^2
  });
}

/// Chein's doubling M(G, 2) of a group G: a Moufang loop of order 2|G| that is
/// associative only when G is abelian. Elements g encode as g, elements g.u as
/// |G| + g.
inline LoopTable chein_loop(const LoopTable& g) {
  const std::size_t m = g.order();
  auto inv = [&](std::size_t h) { return static_cast<std::size_t>(g.rho(static_cast<Element>(h))); };
  auto gm = [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
  };
  return loop_from_operation(2 * m, [&](std::size_t x, std::size_t y) -> std::size_t {
    const bool xu = x >= m, yu = y >= m;
    const std::size_t a = x % m, b = y % m;
    if (!xu && !yu) return gm(a, b);
    if (!xu && yu) return m + gm(b, a);        // g . hu = (hg)u
    if (xu && !yu) return m + gm(a, inv(b));   // gu . h = (g h^-1)u
    return gm(inv(b), a);                      // gu . hu = h^-1 g
  });
}

/// The smallest nonassociative Moufang loop, M(S_3, 2).
inline LoopTable moufang_loop_12() { return chein_loop(dihedral_group(3)); }

struct NamedLoop {
  std::string name;
  LoopTable loop;
};

/// Group tables of order <= 16 shipped with the library.
inline std::vector<NamedLoop> bundled_groups() {
  std::vector<NamedLoop> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  const LoopTable z2 = cyclic_group(2);
  out.push_back({"Z2xZ2", klein_group()});
  out.push_back({"Z2xZ4", direct_product(z2, cyclic_group(4))});
  out.push_back({"Z2xZ2xZ2", direct_product(klein_group(), z2)});
  out.push_back({"Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))});
  out.push_back({"Z2xZ6", direct_product(z2, cyclic_group(6))});
  out.push_back({"Z2^4", direct_product(klein_group(), klein_group())});
  out.push_back({"Z4xZ4", direct_product(cyclic_group(4), cyclic_group(4))});
  out.push_back({"D3", dihedral_group(3)});
  out.push_back({"D4", dihedral_group(4)});
  out.push_back({"D5", dihedral_group(5)});
  out.push_back({"D6", dihedral_group(6)});
  out.push_back({"D7", dihedral_group(7)});
  out.push_back({"D8", dihedral_group(8)});
  out.push_back({"Q8", quaternion_group()});
  out.push_back({"Q8xZ2", direct_product(quaternion_group(), z2)});
  out.push_back({"D4xZ2", direct_product(dihedral_group(4), z2)});
  return out;
}

}  // namespace osborn
