#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "osborn/check.hpp"
#include "osborn/crypto.hpp"
#include "osborn/loop.hpp"
#include "osborn/mappings.hpp"
#include "osborn/properties.hpp"
#include "osborn/search.hpp"

namespace osborn {

/// One labelled clause of a battery.
struct NamedCheck {
  std::string label;
  CheckResult result;
};

using Battery = std::vector<NamedCheck>;

inline bool all_hold(const Battery& b) {
  return std::all_of(b.begin(), b.end(), [](const NamedCheck& c) { return c.result.holds; });
}

namespace detail {

/// Shorthand used by the identity tables below.
struct Terms {
  const LoopTable& loop;
  Element p(Element a, Element b) const { return loop.mul(a, b); }
  Element l(Element a) const { return loop.lam(a); }
  Element r(Element a) const { return loop.rho(a); }
  Element sq(Element a) const { return loop.mul(a, a); }
};

struct PointIdentity {
  int item;
  std::string_view label;
  int arity;
  bool (*eval)(const Terms&, Element, Element);
};

/// Scans x (and y for arity 2), y fastest.
inline CheckResult scan_points(const LoopTable& l, int arity, bool (*eval)(const Terms&, Element, Element)) {
  const Terms t{l};
  const std::size_t ny = arity == 2 ? l.order() : 1;
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    for (std::size_t yi = 0; yi < ny; ++yi) {
      ++checked;
      const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
      if (!eval(t, x, y)) {
        return arity == 2 ? CheckResult::fail({x, y}, checked) : CheckResult::fail({x}, checked);
      }
    }
  }
  return CheckResult::pass(checked);
}

// Squares t^2 are t.t; juxtaposition binds tighter than '.'.
inline constexpr std::array<PointIdentity, 24> kLemma21{{
    {1, "(x^l . xy)^r = x^l . xy^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xl = t.l(x);
       return t.r(t.p(xl, t.p(x, y))) == t.p(xl, t.p(x, t.r(y)));
     }},
    {1, "(x^l . xy^r)^l = (x^l . xy^l)^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xl = t.l(x);
       return t.l(t.p(xl, t.p(x, t.r(y)))) == t.r(t.p(xl, t.p(x, t.l(y))));
     }},
    {2, "J_r : x -> x^l x^l . x", 1,
     [](const Terms& t, Element x, Element) { return t.r(x) == t.p(t.sq(t.l(x)), x); }},
    {2, "J_r^2 : x -> xx . x^r", 1,
     [](const Terms& t, Element x, Element) { return t.r(t.r(x)) == t.p(t.sq(x), t.r(x)); }},
    {2, "J_l : x -> x^ll . x^l x^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return xl == t.p(t.l(xl), t.p(xl, t.r(x)));
     }},
    {2, "J_l^2 : x -> x^l . xx", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return t.l(xl) == t.p(xl, t.sq(x));
     }},
    {2, "J_l : x -> (x^l . xx^l)^2 (x^l . xx)", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return xl == t.p(t.sq(t.p(xl, t.p(x, xl))), t.p(xl, t.sq(x)));
     }},
    {2, "J_l : x -> (x^l x^l . x)^l (x^l x^l . x)^2", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       const Element u = t.p(t.sq(xl), x);
       return xl == t.p(t.l(u), t.sq(u));
     }},
    {2, "J_l^3 : x -> x^l . xx^l", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return t.l(t.l(xl)) == t.p(xl, t.p(x, xl));
     }},
    {3, "x^l . x x^rr = x", 1,
     [](const Terms& t, Element x, Element) { return t.p(t.l(x), t.p(x, t.r(t.r(x)))) == x; }},
    {3, "(x . x^r x^r)^l = x . x^r x", 1,
     [](const Terms& t, Element x, Element) {
       const Element xr = t.r(x);
       return t.l(t.p(x, t.sq(xr))) == t.p(x, t.p(xr, x));
     }},
    {3, "x . x^r x = (x . x^r x^l)^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xr = t.r(x);
       return t.p(x, t.p(xr, x)) == t.r(t.p(x, t.p(xr, t.l(x))));
     }},
    {3, "(x^l . xx)^l = x^l . xx^l", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return t.l(t.p(xl, t.sq(x))) == t.p(xl, t.p(x, xl));
     }},
    {3, "x^lll . x^ll x = x^l . xx", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x), xll = t.l(xl);
       return t.p(t.l(xll), t.p(xll, x)) == t.p(xl, t.sq(x));
     }},
    {3, "w^ll . w^l w^r = x^l . xx  where w = x^ll . x^l x^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       const Element w = t.p(t.l(xl), t.p(xl, t.r(x)));
       return t.p(t.l(t.l(w)), t.p(t.l(w), t.r(w))) == t.p(xl, t.sq(x));
     }},
    {3, "(x^l . xx^l)^2 (x^l . xx) = x^ll . x^l x^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       return t.p(t.sq(t.p(xl, t.p(x, xl))), t.p(xl, t.sq(x))) == t.p(t.l(xl), t.p(xl, t.r(x)));
     }},
    {3, "(x^l x^l . x)^l (x^l x^l . x)^2 = (x^l . xx^l)^2 (x^l . xx)", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       const Element u = t.p(t.sq(xl), x);
       return t.p(t.l(u), t.sq(u)) == t.p(t.sq(t.p(xl, t.p(x, xl))), t.p(xl, t.sq(x)));
     }},
    {3, "w^l w^2 = x^l . xx^l  where w = x^ll . x^l x^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       const Element w = t.p(t.l(xl), t.p(xl, t.r(x)));
       return t.p(t.l(w), t.sq(w)) == t.p(xl, t.p(x, xl));
     }},
    {3, "(x^ll . x^l x^r)^l = (x^ll . x^l x^l)^r", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x), xll = t.l(xl);
       return t.l(t.p(xll, t.p(xl, t.r(x)))) == t.r(t.p(xll, t.sq(xl)));
     }},
    {3, "v^ll . v^l v^r = x^l . xx^l  where v = x^l . xx", 1,
     [](const Terms& t, Element x, Element) {
       const Element xl = t.l(x);
       const Element v = t.p(xl, t.sq(x));
       return t.p(t.l(t.l(v)), t.p(t.l(v), t.r(v))) == t.p(xl, t.p(x, xl));
     }},
    {4, "(x . x^r y^r)^l = (x . x^r y^l)^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xr = t.r(x);
       return t.l(t.p(x, t.p(xr, t.r(y)))) == t.r(t.p(x, t.p(xr, t.l(y))));
     }},
    {4, "(x^l . x y^rr)^l = (x^l . xy)^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xl = t.l(x);
       return t.l(t.p(xl, t.p(x, t.r(t.r(y))))) == t.r(t.p(xl, t.p(x, y)));
     }},
    {4, "(x^ll . x^l y^r)^l = (x^ll . x^l y^l)^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xl = t.l(x), xll = t.l(xl);
       return t.l(t.p(xll, t.p(xl, t.r(y)))) == t.r(t.p(xll, t.p(xl, t.l(y))));
     }},
    {4, "(x^l . xy)^l = (x^l . x y^ll)^r", 2,
     [](const Terms& t, Element x, Element y) {
       const Element xl = t.l(x);
       return t.l(t.p(xl, t.p(x, y))) == t.r(t.p(xl, t.p(x, t.l(t.l(y)))));
     }},
}};

// With a = x^r x and a^-1 read as a^r.
inline constexpr std::array<PointIdentity, 7> kLemma12Equations{{
    {1, "x a = x^ll", 1, [](const Terms& t, Element x, Element) { return t.p(x, t.p(t.r(x), x)) == t.l(t.l(x)); }},
    {1, "a x^l = x^r", 1, [](const Terms& t, Element x, Element) { return t.p(t.p(t.r(x), x), t.l(x)) == t.r(x); }},
    {1, "x^r a = x^l", 1, [](const Terms& t, Element x, Element) { return t.p(t.r(x), t.p(t.r(x), x)) == t.l(x); }},
    {1, "a x = x^rr", 1, [](const Terms& t, Element x, Element) { return t.p(t.p(t.r(x), x), x) == t.r(t.r(x)); }},
    {1, "x a^-1 = a x", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(x, t.r(a)) == t.p(a, x);
     }},
    {1, "a^-1 x^l = x^l a", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(t.r(a), t.l(x)) == t.p(t.l(x), a);
     }},
    {1, "a^-1 x^r = x^r a", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(t.r(a), t.r(x)) == t.p(t.r(x), a);
     }},
}};

// The same statements written as maps, with a^-1 read as a^l.
inline constexpr std::array<PointIdentity, 7> kLemma12Maps{{
    {2, "J_l^2 : x -> x . x^r x", 1,
     [](const Terms& t, Element x, Element) { return t.l(t.l(x)) == t.p(x, t.p(t.r(x), x)); }},
    {2, "J_r : x -> x^r x . x^l", 1,
     [](const Terms& t, Element x, Element) { return t.r(x) == t.p(t.p(t.r(x), x), t.l(x)); }},
    {2, "J_l : x -> x^r . x^r x", 1,
     [](const Terms& t, Element x, Element) { return t.l(x) == t.p(t.r(x), t.p(t.r(x), x)); }},
    {2, "J_r^2 : x -> x^r x . x", 1,
     [](const Terms& t, Element x, Element) { return t.r(t.r(x)) == t.p(t.p(t.r(x), x), x); }},
    {2, "x (x^r x)^-1 = (x^r x) x", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(x, t.l(a)) == t.p(a, x);
     }},
    {2, "(x^r x)^-1 x^l = x^l (x^r x)", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(t.l(a), t.l(x)) == t.p(t.l(x), a);
     }},
    {2, "(x^r x)^-1 x^r = x^r (x^r x)", 1,
     [](const Terms& t, Element x, Element) {
       const Element a = t.p(t.r(x), x);
       return t.p(t.l(a), t.r(x)) == t.p(t.r(x), a);
     }},
}};

inline Battery run_identities(const LoopTable& l, std::span<const PointIdentity> ids, int item = 0) {
  Battery out;
  for (const auto& id : ids) {
    if (item != 0 && id.item != item) continue;
    out.push_back({std::string(id.label), scan_points(l, id.arity, id.eval)});
  }
  return out;
}

inline CheckResult first_failure(const Battery& b) {
  std::uint64_t checked = 0;
  for (const auto& c : b) {
    checked += c.result.checked;
    if (!c.result.holds) {
      CheckResult r = c.result;
      r.clause = c.label;
      r.checked = checked;
      return r;
    }
  }
  return CheckResult::pass(checked);
}

inline CheckResult verdict(bool ok, std::string clause, std::vector<Element> witness = {}, std::uint64_t checked = 1) {
  return ok ? CheckResult::pass(checked) : CheckResult::fail(std::move(clause), std::move(witness), checked);
}

}  // namespace detail

/// LEM_2_1 items 1-4, one verdict per identity.
inline Battery lemma_2_1_battery(const LoopTable& l, int item = 0) {
  if (!is_osborn(l).holds) throw NotOsborn();
  return detail::run_identities(l, detail::kLemma21, item);
}

/// |J_l| = 2, |J_r| = 2, J_l = J_r, LSIP and RSIP: all five verdicts agree.
/// "|J| = 2" is read as J^2 = id.
struct FiveWay {
  std::array<bool, 5> verdicts{};
  std::array<std::string_view, 5> labels{};
  bool coincide() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts[0]; });
  }
};

inline FiveWay lemma_2_1_item5(const LoopTable& l) {
  if (!is_osborn(l).holds) throw NotOsborn();
  const Permutation jl = j_map(l, Side::lambda), jr = j_map(l, Side::rho);
  FiveWay f;
  f.labels = {"J_l^2 = id", "J_r^2 = id", "J_l = J_r", "LSIP", "RSIP"};
  f.verdicts = {(jl * jl).is_identity(), (jr * jr).is_identity(), jl == jr, holds(l, IdentityId::LSIP),
                holds(l, IdentityId::RSIP)};
  return f;
}

/// Power associativity, 3-PAPL, x^r = x^l, LSIP, RSIP on a CC-loop.
inline FiveWay corollary_2_1(const LoopTable& l) {
  if (!is_cc_loop(l)) throw NotCC();
  FiveWay f;
  f.labels = {"power associative", "PAPL3", "x^r = x^l", "LSIP", "RSIP"};
  f.verdicts = {is_power_associative(l).holds, holds(l, IdentityId::PAPL3),
                j_map(l, Side::lambda) == j_map(l, Side::rho), holds(l, IdentityId::LSIP),
                holds(l, IdentityId::RSIP)};
  return f;
}

/// LEM_1_2: the seven equations in a = x^r x, and the same statements in
/// map form. Both forms must give identical verdicts.
struct Lemma12Result {
  Battery equations;
  Battery maps;
  bool forms_agree = true;
};

inline Lemma12Result lemma_1_2_battery(const LoopTable& l) {
  Lemma12Result r;
  r.equations = detail::run_identities(l, detail::kLemma12Equations);
  r.maps = detail::run_identities(l, detail::kLemma12Maps);
  for (std::size_t i = 0; i < r.equations.size(); ++i) {
    r.forms_agree = r.forms_agree && r.equations[i].result.holds == r.maps[i].result.holds;
  }
  return r;
}

/// THM_2_1 items on an Osborn loop.
inline Battery theorem_2_1_battery(const LoopTable& l, int item = 0) {
  if (!is_osborn(l).holds) throw NotOsborn();
  const std::size_t n = l.order();
  Battery out;
  auto want = [item](int i) { return item == 0 || item == i; };

  if (want(1)) {
    // (theta_x, theta_x, L_x T_(x) R_x^{-1}) is an autotopism, theta_x in Inn_lambda.
    const PermGroup inn = inner_group(l, InnerFlavor::lambda);
    CheckResult member = CheckResult::pass(0);
    CheckResult r = CheckResult::pass(0);
    for (std::size_t xi = 0; xi < n && r.holds; ++xi) {
      const auto x = static_cast<Element>(xi);
      const Permutation th = theta_map(l, x);
      ++member.checked;
      if (member.holds && !inn.contains(th)) member = CheckResult::fail({x}, member.checked);
      const Permutation c = left_translation(l, x) * t_map(l, x) * right_translation(l, x).inverse();
      CheckResult a = is_autotopism(l, th, th, c);
      r.checked += a.checked;
      if (!a.holds) r = CheckResult::fail({x, a.witness[0], a.witness[1]}, r.checked);
    }
    out.push_back({"theta_x in Inn_lambda", member});
    out.push_back({"(theta_x, theta_x, L_x T_(x) R_x^-1) in AUT", r});
  }
  if (want(2)) {
    out.push_back({"x = [(x^l . xy)(x^l . xy^r)]x", detail::scan_points(l, 2, [](const detail::Terms& t, Element x, Element y) {
                     const Element xl = t.l(x);
                     return t.p(t.p(t.p(xl, t.p(x, y)), t.p(xl, t.p(x, t.r(y)))), x) == x;
                   })});
    out.push_back({"x = [(x^l . xz^l)(x^l . xz)]x", detail::scan_points(l, 2, [](const detail::Terms& t, Element x, Element z) {
                     const Element xl = t.l(x);
                     return t.p(t.p(t.p(xl, t.p(x, t.l(z))), t.p(xl, t.p(x, z))), x) == x;
                   })});
    CheckResult r = CheckResult::pass(0);
    for (std::size_t xi = 0; xi < n && r.holds; ++xi) {
      const auto x = static_cast<Element>(xi);
      ++r.checked;
      if (t_map(l, x) != left_translation(l, l.lam(x)) * right_translation(l, x)) r = CheckResult::fail({x}, r.checked);
    }
    out.push_back({"T_(x) = L_{x^l} R_x", r});
  }
  if (want(3)) {
    CheckResult r = CheckResult::pass(0);
    for (std::size_t xi = 0; xi < n && r.holds; ++xi) {
      const auto x = static_cast<Element>(xi);
      ++r.checked;
      const Permutation rx = right_translation(l, x);
      if (rx != left_translation(l, l.lam(x)) * rx * left_translation(l, x)) r = CheckResult::fail({x}, r.checked);
    }
    out.push_back({"R_x = L_{x^l} R_x L_x", r});
  }
  if (want(4)) {
    out.push_back({"(x^l . xy)(x^l . xy^r) = e", detail::scan_points(l, 2, [](const detail::Terms& t, Element x, Element y) {
                     const Element xl = t.l(x);
                     return t.p(t.p(xl, t.p(x, y)), t.p(xl, t.p(x, t.r(y)))) == LoopTable::e;
                   })});
    out.push_back({"(x^l . xz^l)(x^l . xz) = e", detail::scan_points(l, 2, [](const detail::Terms& t, Element x, Element z) {
                     const Element xl = t.l(x);
                     return t.p(t.p(xl, t.p(x, t.l(z))), t.p(xl, t.p(x, z))) == LoopTable::e;
                   })});
  }
  return out;
}

/// THM_1_3_1: T_(a) an automorphism forces a.aa = aa.a in N(G); a in the
/// centrum forces (aa)a in Z(G). Witness is a.
inline CheckResult theorem_1_3_item1(const LoopTable& l) {
  if (!is_osborn(l).holds) throw NotOsborn();
  const auto nuc = nuclei(l).nucleus;
  const auto cen = centrum(l);
  const auto z = center(l);
  std::uint64_t checked = 0;
  for (std::size_t ai = 0; ai < l.order(); ++ai) {
    const auto a = static_cast<Element>(ai);
    const Element aa = l.mul(a, a);
    ++checked;
    if (is_automorphism(l, t_map(l, a)).holds) {
      if (l.mul(a, aa) != l.mul(aa, a)) return CheckResult::fail("a.aa = aa.a", {a}, checked);
      if (!contains(nuc, l.mul(aa, a))) return CheckResult::fail("a^3 in N(G)", {a}, checked);
    }
    if (contains(cen, a) && !contains(z, l.mul(aa, a))) return CheckResult::fail("a in C(G) => a^3 in Z(G)", {a}, checked);
  }
  return CheckResult::pass(checked);
}

/// (xx)^r = x^r x^r for all x.
inline bool squares_invert(const LoopTable& l) {
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    if (l.rho(l.mul(x, x)) != l.mul(l.rho(x), l.rho(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Statement registry

enum class StatementId : std::uint8_t {
  THM_1_1,
  THM_1_2,
  THM_1_3_1,
  THM_1_3_2,
  THM_1_4,
  THM_1_5,
  LEM_1_1,
  LEM_1_2,
  THM_2_1,
  THM_2_1_1,
  THM_2_1_2,
  THM_2_1_3,
  THM_2_1_4,
  LEM_2_1_1,
  LEM_2_1_2,
  LEM_2_1_3,
  LEM_2_1_4,
  LEM_2_1_5,
  COR_2_1,
  LEM_2_2,
  LEM_2_3,
  LEM_2_4,
};

struct StatementInfo {
  StatementId id;
  std::string_view name;
  std::string_view precondition;
};

inline constexpr std::array<StatementInfo, 22> kStatements{{
    {StatementId::THM_1_1, "THM_1_1", "Osborn"},
    {StatementId::THM_1_2, "THM_1_2", "Osborn"},
    {StatementId::THM_1_3_1, "THM_1_3_1", "Osborn"},
    {StatementId::THM_1_3_2, "THM_1_3_2", "Osborn and (xx)^r = x^r x^r"},
    {StatementId::THM_1_4, "THM_1_4", "Osborn and exponent 2"},
    {StatementId::THM_1_5, "THM_1_5", "none"},
    {StatementId::LEM_1_1, "LEM_1_1", "Osborn"},
    {StatementId::LEM_1_2, "LEM_1_2", "WIP and Osborn"},
    {StatementId::THM_2_1, "THM_2_1", "none"},
    {StatementId::THM_2_1_1, "THM_2_1_1", "Osborn"},
    {StatementId::THM_2_1_2, "THM_2_1_2", "Osborn"},
    {StatementId::THM_2_1_3, "THM_2_1_3", "Osborn"},
    {StatementId::THM_2_1_4, "THM_2_1_4", "Osborn"},
    {StatementId::LEM_2_1_1, "LEM_2_1_1", "Osborn"},
    {StatementId::LEM_2_1_2, "LEM_2_1_2", "Osborn"},
    {StatementId::LEM_2_1_3, "LEM_2_1_3", "Osborn"},
    {StatementId::LEM_2_1_4, "LEM_2_1_4", "Osborn"},
    {StatementId::LEM_2_1_5, "LEM_2_1_5", "Osborn"},
    {StatementId::COR_2_1, "COR_2_1", "CC-loop"},
    {StatementId::LEM_2_2, "LEM_2_2", "none"},
    {StatementId::LEM_2_3, "LEM_2_3", "none"},
    {StatementId::LEM_2_4, "LEM_2_4", "Osborn"},
}};

inline std::span<const StatementInfo> all_statements() { return kStatements; }

inline const StatementInfo& info(StatementId s) { return kStatements.at(static_cast<std::size_t>(s)); }
inline std::string_view name(StatementId s) { return info(s).name; }

inline StatementId statement_from_name(std::string_view tag) {
  for (const auto& s : kStatements) {
    if (s.name == tag) return s.id;
  }
  throw UnknownStatement(std::string(tag));
}

/// nullopt when the loop does not meet the statement's precondition.
inline std::optional<CheckResult> check_statement(const LoopTable& l, StatementId s) {
  using detail::verdict;
  const bool osborn = is_osborn(l).holds;
  switch (s) {
    case StatementId::THM_1_1:
      if (!osborn) return std::nullopt;
      return theorem_1_1_battery(l);
    case StatementId::THM_1_2: {
      if (!osborn) return std::nullopt;
      const bool same = inner_group(l, InnerFlavor::rho).same_elements(inner_group(l, InnerFlavor::lambda));
      return verdict(same, "Inn_rho = Inn_lambda");
    }
    case StatementId::THM_1_3_1:
      if (!osborn) return std::nullopt;
      return theorem_1_3_item1(l);
    case StatementId::THM_1_3_2: {
      if (!osborn || !squares_invert(l)) return std::nullopt;
      const Permutation j5 = j_map(l, Side::rho).pow(5);
      for (std::size_t xi = 0; xi < l.order(); ++xi) {
        const auto x = static_cast<Element>(xi);
        if (j5(x) != x) return CheckResult::fail("J_r^5 = id", {x}, xi + 1);
      }
      return CheckResult::pass(l.order());
    }
    case StatementId::THM_1_4:
      if (!osborn || !is_exponent_two(l).holds) return std::nullopt;
      return verdict(holds(l, IdentityId::ASSOC) && holds(l, IdentityId::COMM), "abelian group");
    case StatementId::THM_1_5: {
      const CheckResult u = is_universal_wip(l);
      const bool rhs = holds(l, IdentityId::WIP) && osborn;
      CheckResult r = verdict(u.holds == rhs, "universal WIP <=> WIP and Osborn", {}, u.checked);
      return r;
    }
    case StatementId::LEM_1_1: {
      if (!osborn) return std::nullopt;
      const bool moufang = holds(l, IdentityId::MOUFANG);
      const bool comm = holds(l, IdentityId::COMM);
      for (IdentityId id : {IdentityId::FLEX, IdentityId::LAP, IdentityId::RAP, IdentityId::LIP, IdentityId::RIP,
                            IdentityId::AAIP}) {
        if (holds(l, id) && !moufang) return CheckResult::fail(std::string(name(id)) + " => Moufang", {}, 1);
      }
      if (comm && !moufang) return CheckResult::fail("COMM => commutative Moufang", {}, 1);
      if (holds(l, IdentityId::CIP) && !(moufang && comm)) return CheckResult::fail("CIP => commutative Moufang", {}, 1);
      return CheckResult::pass(1);
    }
    case StatementId::LEM_1_2: {
      if (!osborn || !holds(l, IdentityId::WIP)) return std::nullopt;
      const Lemma12Result r = lemma_1_2_battery(l);
      CheckResult eq = detail::first_failure(r.equations);
      if (!eq.holds) return eq;
      CheckResult maps = detail::first_failure(r.maps);
      if (!maps.holds) return maps;
      return verdict(r.forms_agree, "equation and map forms agree");
    }
    case StatementId::THM_2_1: {
      const bool aut = is_osborn(l, OsbornMethod::AUTOTOPISM).holds;
      return verdict(aut == osborn, "Osborn <=> (L_{x^l}, R_x^-1, L_x^-1 R_x^-1) in AUT");
    }
    case StatementId::THM_2_1_1:
    case StatementId::THM_2_1_2:
    case StatementId::THM_2_1_3:
    case StatementId::THM_2_1_4: {
      if (!osborn) return std::nullopt;
      const int item = 1 + static_cast<int>(s) - static_cast<int>(StatementId::THM_2_1_1);
      return detail::first_failure(theorem_2_1_battery(l, item));
    }
    case StatementId::LEM_2_1_1:
    case StatementId::LEM_2_1_2:
    case StatementId::LEM_2_1_3:
    case StatementId::LEM_2_1_4: {
      if (!osborn) return std::nullopt;
      const int item = 1 + static_cast<int>(s) - static_cast<int>(StatementId::LEM_2_1_1);
      return detail::first_failure(lemma_2_1_battery(l, item));
    }
    case StatementId::LEM_2_1_5:
      if (!osborn) return std::nullopt;
      return verdict(lemma_2_1_item5(l).coincide(), "five-way equivalence");
    case StatementId::COR_2_1:
      if (!is_cc_loop(l)) return std::nullopt;
      return verdict(corollary_2_1(l).coincide(), "five-way equivalence");
    case StatementId::LEM_2_2: {
      const PermGroup mult = mult_group(l);
      const PermGroup inn = mult.stabilizer(LoopTable::e);
      for (std::size_t xi = 0; xi < l.order(); ++xi) {
        const auto x = static_cast<Element>(xi);
        const PermGroup cf = cf_set(mult, x);
        if (!cf.is_closed()) return CheckResult::fail("CF_x <= Mult", {x}, xi + 1);
        if (x == LoopTable::e) {
          for (const auto& p : cf.elements()) {
            if (!inn.contains(p)) return CheckResult::fail("CF_e <= Inn", {x}, xi + 1);
          }
        }
      }
      return CheckResult::pass(l.order());
    }
    case StatementId::LEM_2_3:
      return lemma_2_3_battery(l);
    case StatementId::LEM_2_4: {
      if (!osborn) return std::nullopt;
      for (std::size_t xi = 0; xi < l.order(); ++xi) {
        const auto x = static_cast<Element>(xi);
        const Permutation rx = right_translation(l, x);
        for (std::size_t mi = 0; mi < l.order(); ++mi) {
          const auto m = static_cast<Element>(mi);
          if (l.mul(x, l.mul(l.mul(l.lam(x), m), x)) != rx(m)) return CheckResult::fail("yx = x(x^l y . x)", {x, m}, 1);
        }
        if (!is_cf(l, osborn_functional(l, x), LoopTable::e)) return CheckResult::fail("F fixes e", {x}, 1);
      }
      return CheckResult::pass(l.order());
    }
  }
  throw UnknownStatement(std::to_string(static_cast<int>(s)));
}

struct VerificationFailure {
  std::uint64_t loop_digest;
  std::size_t order;
  std::string clause;
  std::vector<Element> witness;
};

struct VerificationReport {
  StatementId statement{};
  std::uint64_t catalog_digest = 0;
  std::size_t loops_tested = 0;
  std::size_t loops_skipped = 0;
  std::vector<VerificationFailure> failures;

  bool ok() const noexcept { return failures.empty(); }

  void merge(const VerificationReport& other) {
    loops_tested += other.loops_tested;
    loops_skipped += other.loops_skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

inline VerificationReport verify(const LoopTable& l, StatementId s) {
  VerificationReport rep;
  rep.statement = s;
  rep.catalog_digest = catalog_digest({l});
  const auto r = check_statement(l, s);
  if (!r) {
    rep.loops_skipped = 1;
    return rep;
  }
  rep.loops_tested = 1;
  if (!r->holds) rep.failures.push_back({digest(l), l.order(), r->clause, r->witness});
  return rep;
}

/// Aggregates `verify` over a catalog. Work is split into contiguous chunks
/// and merged in catalog order, so the report does not depend on `jobs`.
inline VerificationReport verify_catalog(std::span<const LoopTable> loops, StatementId s, unsigned jobs = 1) {
  VerificationReport total;
  total.statement = s;
  total.catalog_digest = catalog_digest(std::vector<LoopTable>(loops.begin(), loops.end()));
  if (loops.empty()) return total;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(loops.size())));
  std::vector<VerificationReport> parts(jobs);
  const std::size_t chunk = (loops.size() + jobs - 1) / jobs;
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        const std::size_t begin = j * chunk, end = std::min(loops.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) parts[j].merge(verify(loops[i], s));
      });
    }
  }
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace osborn
