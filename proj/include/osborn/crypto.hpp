#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "osborn/check.hpp"
#include "osborn/error.hpp"
#include "osborn/loop.hpp"
#include "osborn/mappings.hpp"
#include "osborn/perm_group.hpp"
#include "osborn/properties.hpp"

namespace osborn {

// ---------------------------------------------------------------------------
// Cryptographic functionals: F in Mult(Q) with xF = x.

/// True iff xF = x. Membership of F in Mult(Q) is assumed.
inline bool is_cf(const Permutation& f, Element x) { return f(x) == x; }

inline bool is_cf(const LoopTable& l, const Permutation& f, Element x) {
  if (f.degree() != l.order()) throw DegreeMismatch("functional degree differs from loop order");
  return is_cf(f, x);
}

/// As above, but first checks F against a materialized Mult(Q).
inline bool is_cf(const LoopTable& l, const Permutation& f, Element x, const PermGroup& mult) {
  if (!mult.contains(f)) throw NotInMultGroup();
  return is_cf(l, f, x);
}

/// CF_x(Q): the stabilizer of x in Mult(Q).
inline PermGroup cf_set(const PermGroup& mult, Element x) { return mult.stabilizer(x); }

inline PermGroup cf_set(const LoopTable& l, Element x, std::size_t bound = kDefaultClosureBound) {
  return cf_set(mult_group(l, bound), x);
}

/// For all x, y, z: T_(x) fixes y iff y in C(x); R_(x,y) fixes z iff
/// z in N_lambda(x,y); L_(x,y) fixes z iff z in N_rho(x,y). Witness (x, y, z).
inline CheckResult lemma_2_3_battery(const LoopTable& l) {
  const std::size_t n = l.order();
  std::uint64_t checked = 0;
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Element>(xi);
    const Permutation t = t_map(l, x);
    for (std::size_t yi = 0; yi < n; ++yi) {
      const auto y = static_cast<Element>(yi);
      const LocalSets sets = local_sets(l, x, y);
      const Permutation r = r_inner(l, x, y), li = l_inner(l, x, y);
      ++checked;
      if (is_cf(l, t, y) != contains(sets.commutant, y)) return CheckResult::fail("T_(x) in CF_y <=> y in C(x)", {x, y}, checked);
      for (std::size_t zi = 0; zi < n; ++zi) {
        const auto z = static_cast<Element>(zi);
        ++checked;
        if (is_cf(l, r, z) != contains(sets.n_lambda, z))
          return CheckResult::fail("R_(x,y) in CF_z <=> z in N_l(x,y)", {x, y, z}, checked);
        if (is_cf(l, li, z) != contains(sets.n_rho, z))
          return CheckResult::fail("L_(x,y) in CF_z <=> z in N_r(x,y)", {x, y, z}, checked);
      }
    }
  }
  return CheckResult::pass(checked);
}

/// The functional of the identity yx = x(x^lambda y . x) read as yF = y:
/// F = L_{x^lambda} R_x L_x R_x^{-1}.
inline Permutation osborn_functional(const LoopTable& l, Element x) {
  return left_translation(l, l.lam(x)) * right_translation(l, x) * left_translation(l, x) *
         right_translation(l, x).inverse();
}

// ---------------------------------------------------------------------------
// Cipher schemes. Messages and keys are single loop elements; this is a
// teaching prototype with no padding, chaining or security claims.

enum class SchemeKind { cip, osborn_ci };

inline std::string_view scheme_name(SchemeKind k) { return k == SchemeKind::cip ? "cip" : "osborn"; }

class CipherScheme {
 public:
  /// Throws SchemeInvariantViolated unless the table has the property the
  /// scheme relies on (CIP, resp. the Osborn identity).
  CipherScheme(SchemeKind kind, LoopTable table, Element key) : kind_(kind), table_(std::move(table)), key_(key) {
    if (key_ >= table_.order()) throw SchemeInvariantViolated("key out of range");
    if (kind_ == SchemeKind::cip && !holds(table_, IdentityId::CIP)) {
      throw SchemeInvariantViolated("CIP scheme needs a cross inverse property loop");
    }
    if (kind_ == SchemeKind::osborn_ci && !is_osborn(table_).holds) {
      throw SchemeInvariantViolated("Osborn scheme needs an Osborn loop");
    }
  }

  SchemeKind kind() const noexcept { return kind_; }
  const LoopTable& table() const noexcept { return table_; }
  Element key() const noexcept { return key_; }

  Element encipher(Element m) const { return encipher_with(key_, m); }
  Element decipher(Element c) const { return decipher_with(key_, c); }

  /// CIP: y.m. Osborn: x.((x^lambda.m).x), which equals m.x in an Osborn loop.
  Element encipher_with(Element k, Element m) const {
    const LoopTable& l = table_;
    if (kind_ == SchemeKind::cip) return l.mul(k, m);
    return l.mul(k, l.mul(l.mul(l.lam(k), m), k));
  }

  /// CIP: c.y^rho. Osborn: x^lambda \ ((x \ c) / x), peeling the three
  /// multiplications of the encipherment in reverse.
  Element decipher_with(Element k, Element c) const {
    const LoopTable& l = table_;
    if (kind_ == SchemeKind::cip) return l.mul(c, l.rho(k));
    return l.ldiv(l.lam(k), l.rdiv(l.ldiv(k, c), k));
  }

  /// One-step decipherment c / x, valid because the ciphertext equals m.x.
  Element decipher_single_step(Element k, Element c) const { return table_.rdiv(c, k); }

 private:
  SchemeKind kind_;
  LoopTable table_;
  Element key_;
};

/// Keys along an inverse cycle: seed, seed^rho, seed^rho^2, ... (or the
/// lambda direction, which walks the same cycle backwards).
struct KeySchedule {
  Element seed = 0;
  std::vector<Element> stream;
  std::size_t period = 1;
  /// Set when the stream is longer than the cycle, so keys repeat.
  bool reuse_warning = false;
};

inline KeySchedule key_schedule(const LoopTable& l, Element seed, std::size_t k, Side direction = Side::rho) {
  if (k == 0) throw Error("key schedule length must be at least 1");
  if (seed >= l.order()) throw Error("seed out of range");
  auto step = [&](Element x) { return direction == Side::rho ? l.rho(x) : l.lam(x); };
  KeySchedule ks;
  ks.seed = seed;
  ks.period = 1;
  for (Element x = step(seed); x != seed; x = step(x)) ++ks.period;
  Element cur = seed;
  for (std::size_t i = 0; i < k; ++i) {
    ks.stream.push_back(cur);
    cur = step(cur);
  }
  ks.reuse_warning = ks.period < k;
  return ks;
}

/// Message i is processed under stream[i mod k].
inline std::vector<Element> encipher_stream(const CipherScheme& s, const KeySchedule& ks, std::span<const Element> msgs) {
  std::vector<Element> out;
  out.reserve(msgs.size());
  for (std::size_t i = 0; i < msgs.size(); ++i) out.push_back(s.encipher_with(ks.stream[i % ks.stream.size()], msgs[i]));
  return out;
}

inline std::vector<Element> decipher_stream(const CipherScheme& s, const KeySchedule& ks, std::span<const Element> cts) {
  std::vector<Element> out;
  out.reserve(cts.size());
  for (std::size_t i = 0; i < cts.size(); ++i) out.push_back(s.decipher_with(ks.stream[i % ks.stream.size()], cts[i]));
  return out;
}

}  // namespace osborn
