#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osborn/check.hpp"
#include "osborn/loop.hpp"
#include "osborn/perm_group.hpp"
#include "osborn/properties.hpp"

namespace osborn {

/// An autotopism (A, B, C); the constructor verifies xA.yB = (x.y)C.
class Autotopism {
 public:
  Autotopism(const LoopTable& l, Permutation a, Permutation b, Permutation c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    const CheckResult r = is_autotopism(l, a_, b_, c_);
    if (!r.holds) throw Error("triple is not an autotopism");
  }

  const Permutation& a() const noexcept { return a_; }
  const Permutation& b() const noexcept { return b_; }
  const Permutation& c() const noexcept { return c_; }

 private:
  Permutation a_, b_, c_;
};

/// T_(x) = R_x L_x^{-1} : y -> x \ (y x)
inline Permutation t_map(const LoopTable& l, Element x) {
  return detail::tabulate(l.order(), [&](Element y) { return l.ldiv(x, l.mul(y, x)); });
}

/// R_(x,y) = R_x R_y R_{xy}^{-1} : z -> ((z x) y) / (x y)
inline Permutation r_inner(const LoopTable& l, Element x, Element y) {
  const Element xy = l.mul(x, y);
  return detail::tabulate(l.order(), [&](Element z) { return l.rdiv(l.mul(l.mul(z, x), y), xy); });
}

/// L_(x,y) = L_x L_y L_{yx}^{-1} : z -> (y x) \ (y (x z))
inline Permutation l_inner(const LoopTable& l, Element x, Element y) {
  const Element yx = l.mul(y, x);
  return detail::tabulate(l.order(), [&](Element z) { return l.ldiv(yx, l.mul(y, l.mul(x, z))); });
}

inline PermGroup mult_group(const LoopTable& l, std::size_t bound = kDefaultClosureBound) {
  std::vector<Permutation> gens;
  for (std::size_t x = 1; x < l.order(); ++x) {
    gens.push_back(left_translation(l, static_cast<Element>(x)));
    gens.push_back(right_translation(l, static_cast<Element>(x)));
  }
  return PermGroup::generate(l.order(), std::move(gens), bound);
}

/// Which inner mapping group. `rho` is generated by the L_(x,y), `lambda` by
/// the R_(x,y), `mu` by the T_(x); `all` is the stabilizer of e in Mult.
enum class InnerFlavor { all, rho, lambda, mu };

inline PermGroup inner_group(const LoopTable& l, InnerFlavor flavor, std::size_t bound = kDefaultClosureBound) {
  const std::size_t n = l.order();
  if (flavor == InnerFlavor::all) return mult_group(l, bound).stabilizer(LoopTable::e);
  std::vector<Permutation> gens;
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    if (flavor == InnerFlavor::mu) {
      gens.push_back(t_map(l, ex));
      continue;
    }
    for (std::size_t y = 0; y < n; ++y) {
      const auto ey = static_cast<Element>(y);
      gens.push_back(flavor == InnerFlavor::rho ? l_inner(l, ex, ey) : r_inner(l, ex, ey));
    }
  }
  return PermGroup::generate(n, std::move(gens), bound);
}

inline CheckResult is_automorphism(const LoopTable& l, const Permutation& t) { return is_autotopism(l, t, t, t); }

/// Right pseudo-automorphism with companion c: (c.xT).yT = c.((xy)T)
///
/// This is the mirror of the textbook right-hand law xT.(yT.c) = ((xy)T).c.
/// The companion formulas attached to PS_rho and PS_lambda for Osborn and
/// Moufang loops hold under this orientation (see theorem_1_1_battery).
inline CheckResult is_right_pseudo_aut(const LoopTable& l, const Permutation& t, Element c) {
  if (t.degree() != l.order()) throw DegreeMismatch("pseudo-automorphism degree differs from loop order");
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    for (std::size_t yi = 0; yi < l.order(); ++yi) {
      ++checked;
      const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
      if (l.mul(l.mul(c, t(x)), t(y)) != l.mul(c, t(l.mul(x, y)))) return CheckResult::fail({x, y}, checked);
    }
  }
  return CheckResult::pass(checked);
}

/// Left pseudo-automorphism with companion c: xT.(yT.c) = ((xy)T).c
inline CheckResult is_left_pseudo_aut(const LoopTable& l, const Permutation& t, Element c) {
  if (t.degree() != l.order()) throw DegreeMismatch("pseudo-automorphism degree differs from loop order");
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    for (std::size_t yi = 0; yi < l.order(); ++yi) {
      ++checked;
      const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
      if (l.mul(t(x), l.mul(t(y), c)) != l.mul(t(l.mul(x, y)), c)) return CheckResult::fail({x, y}, checked);
    }
  }
  return CheckResult::pass(checked);
}

/// Recorded in reports so the orientation can be audited.
inline constexpr std::string_view kPseudoAutConvention =
    "right: (c.xT).yT = c.((xy)T); left: xT.(yT.c) = ((xy)T).c";

enum class PseudoSide { left, right };

/// A verified pseudo-automorphism together with its companion.
struct PseudoAutWitness {
  Permutation map;
  Element companion;
  PseudoSide side;
};

/// Least companion c making `t` a pseudo-automorphism on `side`, if any.
inline std::optional<PseudoAutWitness> find_companion(const LoopTable& l, const Permutation& t, PseudoSide side) {
  for (std::size_t c = 0; c < l.order(); ++c) {
    const auto ec = static_cast<Element>(c);
    const bool ok = side == PseudoSide::left ? is_left_pseudo_aut(l, t, ec).holds : is_right_pseudo_aut(l, t, ec).holds;
    if (ok) return PseudoAutWitness{t, ec, side};
  }
  return std::nullopt;
}

/// For every x: R_x^{-1} L_x is a left pseudo-automorphism with companion x and
/// L_x^{-1} R_x a right pseudo-automorphism with companion x. Witness is
/// (x, y, z) with the failing pair (y, z).
inline CheckResult is_vd_loop(const LoopTable& l) {
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    const Permutation lx = left_translation(l, x), rx = right_translation(l, x);
    CheckResult left = is_left_pseudo_aut(l, rx.inverse() * lx, x);
    checked += left.checked;
    if (!left.holds) return CheckResult::fail("R_x^-1 L_x in PS_lambda", {x, left.witness[0], left.witness[1]}, checked);
    CheckResult right = is_right_pseudo_aut(l, lx.inverse() * rx, x);
    checked += right.checked;
    if (!right.holds) return CheckResult::fail("L_x^-1 R_x in PS_rho", {x, right.witness[0], right.witness[1]}, checked);
  }
  return CheckResult::pass(checked);
}

/// Companion of R_(x,y) claimed for Osborn loops: (xy)^lambda . (y^lambda \ x).
inline Element r_inner_companion(const LoopTable& l, Element x, Element y) {
  return l.mul(l.lam(l.mul(x, y)), l.ldiv(l.lam(y), x));
}

struct LeftInnerCompanion {
  Element x, y;
  std::optional<Element> companion;
};

/// Least left companion of each L_(x,y), found by scanning all candidates.
inline std::vector<LeftInnerCompanion> left_inner_companions(const LoopTable& l) {
  std::vector<LeftInnerCompanion> out;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    for (std::size_t yi = 0; yi < l.order(); ++yi) {
      const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
      auto w = find_companion(l, l_inner(l, x, y), PseudoSide::left);
      out.push_back({x, y, w ? std::optional<Element>(w->companion) : std::nullopt});
    }
  }
  return out;
}

/// R_(x,y) in PS_rho with companion (xy)^lambda (y^lambda \ x); L_(x,y) in
/// PS_lambda for some companion; R_(x,y)^{-1} = [L_{y^rho}^{-1}, R_x^{-1}]
/// = L_(y^lambda, x^lambda). Witness is (x, y).
inline CheckResult theorem_1_1_battery(const LoopTable& l) {
  if (!is_osborn(l).holds) throw NotOsborn();
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < l.order(); ++xi) {
    for (std::size_t yi = 0; yi < l.order(); ++yi) {
      const auto x = static_cast<Element>(xi), y = static_cast<Element>(yi);
      const Permutation r = r_inner(l, x, y);
      CheckResult ps = is_right_pseudo_aut(l, r, r_inner_companion(l, x, y));
      checked += ps.checked;
      if (!ps.holds) return CheckResult::fail("R_(x,y) in PS_rho", {x, y}, checked);

      ++checked;
      if (!find_companion(l, l_inner(l, x, y), PseudoSide::left)) {
        return CheckResult::fail("L_(x,y) in PS_lambda", {x, y}, checked);
      }

      const Permutation r_inv = r.inverse();
      const Permutation comm =
          commutator(left_translation(l, l.rho(y)).inverse(), right_translation(l, x).inverse());
      ++checked;
      if (r_inv != comm) return CheckResult::fail("R_(x,y)^-1 = [L_{y^r}^-1, R_x^-1]", {x, y}, checked);
      ++checked;
      if (r_inv != l_inner(l, l.lam(y), l.lam(x))) {
        return CheckResult::fail("R_(x,y)^-1 = L_(y^l, x^l)", {x, y}, checked);
      }
    }
  }
  return CheckResult::pass(checked);
}

}  // namespace osborn
