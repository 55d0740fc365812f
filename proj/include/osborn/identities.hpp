#pragma once

#include <array>
#include <span>
#include <cstdint>
#include <string>
#include <string_view>

#include "osborn/error.hpp"
#include "osborn/permutation.hpp"
#include "osborn/table.hpp"

namespace osborn {

/// Every named loop identity the toolkit can check by exhaustion.
enum class IdentityId : std::uint8_t {
  OS1,
  OS2,
  OS3,
  OS2P,
  OS3P,
  WIP,
  CIP,
  LIP,
  RIP,
  AAIP,
  FLEX,
  LAP,
  RAP,
  MOUFANG,
  CC_LEFT,
  CC_RIGHT,
  PAPL3,
  LSIP,
  RSIP,
  COMM,
  ASSOC,
  EXP2,
  AIP,
};

inline constexpr std::size_t kIdentityCount = 23;

/// Outcome of evaluating one instance of an identity. `unknown` only arises
/// on partially filled tables during search.
enum class Tri : std::uint8_t { holds, fails, unknown };

/// Operation bundle over a complete loop table.
struct FullOps {
  const LoopTable* loop;

  static constexpr Element e = 0;
  Element mul(Element a, Element b) const { return loop->mul(a, b); }
  Element ldiv(Element a, Element c) const { return loop->ldiv(a, c); }
  Element rdiv(Element c, Element b) const { return loop->rdiv(c, b); }
  Element lam(Element a) const { return loop->lam(a); }
  Element rho(Element a) const { return loop->rho(a); }
};

/// Operation bundle over a partially filled reduced Latin square. Any
/// operation whose value is not yet determined yields kUndefined, which
/// propagates through every later operation.
struct PartialOps {
  std::size_t n;
  const Element* cells;   // cells[a*n + b] = a.b or kUndefined
  const Element* rowpos;  // rowpos[a*n + c] = b with a.b = c, or kUndefined
  const Element* colpos;  // colpos[b*n + c] = a with a.b = c, or kUndefined

  static constexpr Element e = 0;
  Element mul(Element a, Element b) const {
    return (a == kUndefined || b == kUndefined) ? kUndefined : cells[a * n + b];
  }
  Element ldiv(Element a, Element c) const {
    return (a == kUndefined || c == kUndefined) ? kUndefined : rowpos[a * n + c];
  }
  Element rdiv(Element c, Element b) const {
    return (c == kUndefined || b == kUndefined) ? kUndefined : colpos[b * n + c];
  }
  Element lam(Element a) const { return a == kUndefined ? kUndefined : colpos[a * n + 0]; }
  Element rho(Element a) const { return a == kUndefined ? kUndefined : rowpos[a * n + 0]; }
};

namespace identities {

inline constexpr Tri same(Element a, Element b) {
  if (a == kUndefined || b == kUndefined) return Tri::unknown;
  return a == b ? Tri::holds : Tri::fails;
}

// Variables follow the equations: (x), (x, y) or (x, y, z).

template <class O>
Tri os1(const O& o, Element x, Element y, Element z) {
  // yx . (z theta_y . y) = (y . xz) . y, with z theta_y = y^lambda . yz
  const Element zt = o.mul(o.lam(y), o.mul(y, z));
  return same(o.mul(o.mul(y, x), o.mul(zt, y)), o.mul(o.mul(y, o.mul(x, z)), y));
}

template <class O>
Tri os2(const O& o, Element x, Element y, Element z) {
  return same(o.mul(x, o.mul(o.mul(y, z), x)), o.mul(o.ldiv(o.lam(x), y), o.mul(z, x)));
}

template <class O>
Tri os3(const O& o, Element x, Element y, Element z) {
  // z E_x^{-1} is the w with (w.x).x^rho = z, i.e. (z / x^rho) / x.
  const Element ze = o.rdiv(o.rdiv(z, o.rho(x)), x);
  return same(o.mul(o.mul(x, o.mul(y, z)), x), o.mul(o.mul(x, y), o.mul(ze, x)));
}

template <class O>
Tri os2p(const O& o, Element x, Element y, Element z) {
  return same(o.mul(x, o.mul(o.mul(o.mul(o.lam(x), y), z), x)), o.mul(y, o.mul(z, x)));
}

template <class O>
Tri os3p(const O& o, Element x, Element y, Element z) {
  return same(o.mul(o.mul(x, o.mul(y, z)), x), o.mul(o.mul(x, y), o.mul(o.mul(o.lam(x), o.mul(x, z)), x)));
}

template <class O>
Tri wip(const O& o, Element x, Element y, Element z) {
  const Element lhs = o.mul(o.mul(x, y), z);
  if (lhs == kUndefined) return Tri::unknown;
  if (lhs != O::e) return Tri::holds;
  return same(o.mul(x, o.mul(y, z)), O::e);
}

template <class O>
Tri cip(const O& o, Element x, Element y, Element) {
  return same(o.mul(o.mul(x, y), o.rho(x)), y);
}

template <class O>
Tri lip(const O& o, Element x, Element y, Element) {
  return same(o.mul(o.lam(x), o.mul(x, y)), y);
}

template <class O>
Tri rip(const O& o, Element x, Element y, Element) {
  return same(o.mul(o.mul(y, x), o.rho(x)), y);
}

template <class O>
Tri aaip(const O& o, Element x, Element y, Element) {
  return same(o.rho(o.mul(x, y)), o.mul(o.rho(y), o.rho(x)));
}

template <class O>
Tri flex(const O& o, Element x, Element y, Element) {
  return same(o.mul(x, o.mul(y, x)), o.mul(o.mul(x, y), x));
}

template <class O>
Tri lap(const O& o, Element x, Element y, Element) {
  return same(o.mul(x, o.mul(x, y)), o.mul(o.mul(x, x), y));
}

template <class O>
Tri rap(const O& o, Element x, Element y, Element) {
  return same(o.mul(o.mul(y, x), x), o.mul(y, o.mul(x, x)));
}

template <class O>
Tri moufang(const O& o, Element x, Element y, Element z) {
  return same(o.mul(o.mul(x, y), o.mul(z, x)), o.mul(o.mul(x, o.mul(y, z)), x));
}

template <class O>
Tri cc_left(const O& o, Element x, Element y, Element z) {
  return same(o.mul(x, o.mul(y, z)), o.mul(o.rdiv(o.mul(x, y), x), o.mul(x, z)));
}

template <class O>
Tri cc_right(const O& o, Element x, Element y, Element z) {
  return same(o.mul(o.mul(z, y), x), o.mul(o.mul(z, x), o.ldiv(x, o.mul(y, x))));
}

template <class O>
Tri papl3(const O& o, Element x, Element, Element) {
  return same(o.mul(o.mul(x, x), x), o.mul(x, o.mul(x, x)));
}

template <class O>
Tri lsip(const O& o, Element x, Element, Element) {
  return same(o.mul(o.lam(x), o.mul(x, x)), x);
}

template <class O>
Tri rsip(const O& o, Element x, Element, Element) {
  return same(o.mul(o.mul(x, x), o.rho(x)), x);
}

template <class O>
Tri comm(const O& o, Element x, Element y, Element) {
  return same(o.mul(x, y), o.mul(y, x));
}

template <class O>
Tri assoc(const O& o, Element x, Element y, Element z) {
  return same(o.mul(o.mul(x, y), z), o.mul(x, o.mul(y, z)));
}

template <class O>
Tri exp2(const O& o, Element x, Element, Element) {
  return same(o.mul(x, x), O::e);
}

template <class O>
Tri aip(const O& o, Element x, Element y, Element) {
  return same(o.rho(o.mul(x, y)), o.mul(o.rho(x), o.rho(y)));
}

}  // namespace identities

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  int arity;
  std::string_view equation;
  Tri (*full)(const FullOps&, Element, Element, Element);
  Tri (*partial)(const PartialOps&, Element, Element, Element);
};

namespace detail {

#define OSBORN_IDENTITY(tag, arity, eq, fn) \
  IdentityInfo { IdentityId::tag, #tag, arity, eq, &identities::fn<FullOps>, &identities::fn<PartialOps> }

inline constexpr std::array<IdentityInfo, kIdentityCount> kIdentities{{
    OSBORN_IDENTITY(OS1, 3, "yx.(z theta_y . y) = (y.xz).y", os1),
    OSBORN_IDENTITY(OS2, 3, "x(yz.x) = (x^l \\ y).zx", os2),
    OSBORN_IDENTITY(OS3, 3, "(x.yz)x = xy.(z E_x^-1 . x)", os3),
    OSBORN_IDENTITY(OS2P, 3, "x[(x^l y)z . x] = y.zx", os2p),
    OSBORN_IDENTITY(OS3P, 3, "(x.yz)x = xy.[(x^l . xz).x]", os3p),
    OSBORN_IDENTITY(WIP, 3, "xy.z = e implies x.yz = e", wip),
    OSBORN_IDENTITY(CIP, 2, "xy.x^r = y", cip),
    OSBORN_IDENTITY(LIP, 2, "x^l.xy = y", lip),
    OSBORN_IDENTITY(RIP, 2, "yx.x^r = y", rip),
    OSBORN_IDENTITY(AAIP, 2, "(xy)^r = y^r x^r", aaip),
    OSBORN_IDENTITY(FLEX, 2, "x.yx = xy.x", flex),
    OSBORN_IDENTITY(LAP, 2, "x.xy = xx.y", lap),
    OSBORN_IDENTITY(RAP, 2, "yx.x = y.xx", rap),
    OSBORN_IDENTITY(MOUFANG, 3, "xy.zx = (x.yz)x", moufang),
    OSBORN_IDENTITY(CC_LEFT, 3, "x.yz = (xy)/x . xz", cc_left),
    OSBORN_IDENTITY(CC_RIGHT, 3, "zy.x = zx . x\\(yx)", cc_right),
    OSBORN_IDENTITY(PAPL3, 1, "xx.x = x.xx", papl3),
    OSBORN_IDENTITY(LSIP, 1, "x^l.xx = x", lsip),
    OSBORN_IDENTITY(RSIP, 1, "xx.x^r = x", rsip),
    OSBORN_IDENTITY(COMM, 2, "xy = yx", comm),
    OSBORN_IDENTITY(ASSOC, 3, "xy.z = x.yz", assoc),
    OSBORN_IDENTITY(EXP2, 1, "xx = e", exp2),
    OSBORN_IDENTITY(AIP, 2, "(xy)^r = x^r y^r", aip),
}};

#undef OSBORN_IDENTITY

consteval bool registry_in_enum_order() {
  for (std::size_t i = 0; i < kIdentities.size(); ++i) {
    if (static_cast<std::size_t>(kIdentities[i].id) != i) return false;
  }
  return true;
}
static_assert(registry_in_enum_order());

}  // namespace detail

inline constexpr std::span<const IdentityInfo> all_identities() { return detail::kIdentities; }

inline const IdentityInfo& info(IdentityId id) {
  const auto i = static_cast<std::size_t>(id);
  if (i >= kIdentityCount) throw UnknownIdentity(std::to_string(i));
  return detail::kIdentities[i];
}

inline std::string_view name(IdentityId id) { return info(id).name; }

inline IdentityId identity_from_name(std::string_view tag) {
  for (const auto& i : detail::kIdentities) {
    if (i.name == tag) return i.id;
  }
  throw UnknownIdentity(std::string(tag));
}

/// Evaluates one instance of `id` on a complete table.
inline bool evaluate(const LoopTable& l, IdentityId id, Element x, Element y = 0, Element z = 0) {
  return info(id).full(FullOps{&l}, x, y, z) == Tri::holds;
}

}  // namespace osborn
