#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <string_view>
#include <vector>

#include "osborn/check.hpp"
#include "osborn/identities.hpp"
#include "osborn/loop.hpp"
#include "osborn/table.hpp"

namespace osborn {

/// Exhaustive scan of all tuples of the identity's arity, x slowest and the
/// last variable fastest. Returns the first counterexample.
inline CheckResult check_identity(const LoopTable& l, IdentityId id) {
  const IdentityInfo& inf = info(id);
  const FullOps ops{&l};
  const std::size_t n = l.order();
  const std::size_t ny = inf.arity >= 2 ? n : 1;
  const std::size_t nz = inf.arity >= 3 ? n : 1;
  std::uint64_t checked = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t z = 0; z < nz; ++z) {
        ++checked;
        const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y), ez = static_cast<Element>(z);
        if (inf.full(ops, ex, ey, ez) != Tri::holds) {
          std::vector<Element> w{ex};
          if (inf.arity >= 2) w.push_back(ey);
          if (inf.arity >= 3) w.push_back(ez);
          return CheckResult::fail(std::move(w), checked);
        }
      }
    }
  }
  return CheckResult::pass(checked);
}

inline bool holds(const LoopTable& l, IdentityId id) { return check_identity(l, id).holds; }

enum class OsbornMethod { OS2, OS3, OS2P, OS3P, AUTOTOPISM };

inline constexpr std::array<OsbornMethod, 5> kOsbornMethods{OsbornMethod::OS2, OsbornMethod::OS3, OsbornMethod::OS2P,
                                                           OsbornMethod::OS3P, OsbornMethod::AUTOTOPISM};

/// The autotopism (L_{x^lambda}, R_x^{-1}, L_x^{-1} R_x^{-1}) attached to x.
struct OsbornTriple {
  Permutation a, b, c;
};

inline OsbornTriple osborn_autotopism(const LoopTable& l, Element x) {
  const Permutation rx_inv = right_translation(l, x).inverse();
  return {left_translation(l, l.lam(x)), rx_inv, left_translation(l, x).inverse() * rx_inv};
}

/// Witness for the AUTOTOPISM method is (x, y, z): the triple for x fails on
/// the pair (y, z).
inline CheckResult is_osborn(const LoopTable& l, OsbornMethod method = OsbornMethod::OS2) {
  switch (method) {
    case OsbornMethod::OS2: return check_identity(l, IdentityId::OS2);
    case OsbornMethod::OS3: return check_identity(l, IdentityId::OS3);
    case OsbornMethod::OS2P: return check_identity(l, IdentityId::OS2P);
    case OsbornMethod::OS3P: return check_identity(l, IdentityId::OS3P);
    case OsbornMethod::AUTOTOPISM: break;
  }
  std::uint64_t checked = 0;
  for (std::size_t x = 0; x < l.order(); ++x) {
    const auto t = osborn_autotopism(l, static_cast<Element>(x));
    CheckResult r = is_autotopism(l, t.a, t.b, t.c);
    checked += r.checked;
    if (!r.holds) {
      return CheckResult::fail({static_cast<Element>(x), r.witness[0], r.witness[1]}, checked);
    }
  }
  return CheckResult::pass(checked);
}

inline std::string_view method_name(OsbornMethod m) {
  switch (m) {
    case OsbornMethod::OS2: return "OS2";
    case OsbornMethod::OS3: return "OS3";
    case OsbornMethod::OS2P: return "OS2P";
    case OsbornMethod::OS3P: return "OS3P";
    case OsbornMethod::AUTOTOPISM: return "AUTOTOPISM";
  }
  return "?";
}

using ElementSet = std::vector<Element>;

struct Nuclei {
  ElementSet left, middle, right, nucleus;
};

/// N_lambda, N_mu, N_rho and their intersection.
inline Nuclei nuclei(const LoopTable& l) {
  const std::size_t n = l.order();
  Nuclei out;
  for (std::size_t ai = 0; ai < n; ++ai) {
    const auto a = static_cast<Element>(ai);
    bool left = true, middle = true, right = true;
    for (std::size_t xi = 0; xi < n; ++xi) {
      for (std::size_t yi = 0; yi < n; ++yi) {
        const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
        left = left && l.mul(l.mul(a, x), y) == l.mul(a, l.mul(x, y));
        middle = middle && l.mul(x, l.mul(a, y)) == l.mul(l.mul(x, a), y);
        right = right && l.mul(x, l.mul(y, a)) == l.mul(l.mul(x, y), a);
      }
    }
    if (left) out.left.push_back(a);
    if (middle) out.middle.push_back(a);
    if (right) out.right.push_back(a);
    if (left && middle && right) out.nucleus.push_back(a);
  }
  return out;
}

inline ElementSet centrum(const LoopTable& l) {
  ElementSet out;
  for (std::size_t a = 0; a < l.order(); ++a) {
    bool ok = true;
    for (std::size_t x = 0; x < l.order() && ok; ++x) {
      ok = l.mul(static_cast<Element>(a), static_cast<Element>(x)) == l.mul(static_cast<Element>(x), static_cast<Element>(a));
    }
    if (ok) out.push_back(static_cast<Element>(a));
  }
  return out;
}

/// Z(L) = N(L) intersected with C(L).
inline ElementSet center(const LoopTable& l) {
  const ElementSet n = nuclei(l).nucleus;
  const ElementSet c = centrum(l);
  ElementSet out;
  std::set_intersection(n.begin(), n.end(), c.begin(), c.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const ElementSet& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

struct LocalSets {
  ElementSet n_lambda;  // {z | zx.y = z.xy}
  ElementSet n_rho;     // {z | y.xz = yx.z}
  ElementSet commutant; // C(x) = {y | xy = yx}
};

inline LocalSets local_sets(const LoopTable& l, Element x, Element y) {
  LocalSets s;
  for (std::size_t zi = 0; zi < l.order(); ++zi) {
    const auto z = static_cast<Element>(zi);
    if (l.mul(l.mul(z, x), y) == l.mul(z, l.mul(x, y))) s.n_lambda.push_back(z);
    if (l.mul(y, l.mul(x, z)) == l.mul(l.mul(y, x), z)) s.n_rho.push_back(z);
    if (l.mul(x, z) == l.mul(z, x)) s.commutant.push_back(z);
  }
  return s;
}

/// Holds iff the submagma generated by each x is associative. The witness is
/// the offending generator x.
inline CheckResult is_power_associative(const LoopTable& l) {
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    const auto s = generated_submagma(l, x);
    for (Element a : s) {
      for (Element b : s) {
        for (Element c : s) {
          ++checked;
          if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c))) return CheckResult::fail({x}, checked);
        }
      }
    }
  }
  return CheckResult::pass(checked);
}

inline CheckResult is_exponent_two(const LoopTable& l) { return check_identity(l, IdentityId::EXP2); }

/// WIP in every principal isotope. Scans (u, v) with v fastest; on failure
/// `isotope` holds (u, v) and `witness` the WIP triple in the isotope's labels.
inline CheckResult is_universal_wip(const LoopTable& l) {
  std::uint64_t checked = 0;
  for (std::size_t u = 0; u < l.order(); ++u) {
    for (std::size_t v = 0; v < l.order(); ++v) {
      const LoopTable iso = principal_isotope(l, static_cast<Element>(u), static_cast<Element>(v));
      CheckResult r = check_identity(iso, IdentityId::WIP);
      checked += r.checked;
      if (!r.holds) {
        r.checked = checked;
        r.isotope = std::pair{static_cast<Element>(u), static_cast<Element>(v)};
        return r;
      }
    }
  }
  return CheckResult::pass(checked);
}

/// Every identity in the lattice plus the derived flags.
struct PropertyReport {
  std::map<IdentityId, CheckResult> results;
  CheckResult power_associative;
  CheckResult universal_wip;

  bool is_osborn = false;
  bool is_group = false;
  bool is_moufang = false;
  bool is_cc = false;
  bool is_power_associative = false;
  bool is_universal_wip = false;
};

inline PropertyReport property_report(const LoopTable& l) {
  PropertyReport r;
  for (const auto& inf : all_identities()) r.results.emplace(inf.id, check_identity(l, inf.id));
  r.power_associative = is_power_associative(l);
  r.universal_wip = is_universal_wip(l);
  r.is_osborn = r.results.at(IdentityId::OS2).holds;
  r.is_group = r.results.at(IdentityId::ASSOC).holds;
  r.is_moufang = r.results.at(IdentityId::MOUFANG).holds;
  r.is_cc = r.results.at(IdentityId::CC_LEFT).holds && r.results.at(IdentityId::CC_RIGHT).holds;
  r.is_power_associative = r.power_associative.holds;
  r.is_universal_wip = r.universal_wip.holds;
  return r;
}

inline bool is_cc_loop(const LoopTable& l) { return holds(l, IdentityId::CC_LEFT) && holds(l, IdentityId::CC_RIGHT); }

}  // namespace osborn
