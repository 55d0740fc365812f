#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "osborn/permutation.hpp"
#include "osborn/table.hpp"

namespace osborn {

inline Element mul(const LoopTable& l, Element x, Element y) { return l.mul(x, y); }
inline Element ldiv(const LoopTable& l, Element x, Element z) { return l.ldiv(x, z); }
inline Element rdiv(const LoopTable& l, Element z, Element y) { return l.rdiv(z, y); }

inline Element lambda_inv(const LoopTable& l, Element x) { return l.lam(x); }
inline Element rho_inv(const LoopTable& l, Element x) { return l.rho(x); }

namespace detail {

template <class F>
Permutation tabulate(std::size_t n, F&& f) {
  std::vector<Element> img(n);
  for (std::size_t y = 0; y < n; ++y) img[y] = f(static_cast<Element>(y));
  return Permutation::unchecked(std::move(img));
}

}  // namespace detail

/// L_x : y -> x.y
inline Permutation left_translation(const LoopTable& l, Element x) {
  return detail::tabulate(l.order(), [&](Element y) { return l.mul(x, y); });
}

/// R_x : y -> y.x
inline Permutation right_translation(const LoopTable& l, Element x) {
  return detail::tabulate(l.order(), [&](Element y) { return l.mul(y, x); });
}

enum class Side { lambda, rho };

/// J_lambda : x -> x^lambda, J_rho : x -> x^rho.
inline Permutation j_map(const LoopTable& l, Side side) {
  return detail::tabulate(l.order(), [&](Element x) { return side == Side::lambda ? l.lam(x) : l.rho(x); });
}

/// E_x = R_x R_{x^rho} : y -> (y.x).x^rho
inline Permutation e_map(const LoopTable& l, Element x) {
  const Element xr = l.rho(x);
  return detail::tabulate(l.order(), [&](Element y) { return l.mul(l.mul(y, x), xr); });
}

/// theta_x = L_x L_{x^lambda} : y -> x^lambda.(x.y)
inline Permutation theta_map(const LoopTable& l, Element x) {
  const Element xl = l.lam(x);
  return detail::tabulate(l.order(), [&](Element y) { return l.mul(xl, l.mul(x, y)); });
}

/// Principal isotope x o y = (x/v).(u\y). Its identity u.v is relabeled to 0.
inline LoopTable principal_isotope(const LoopTable& l, Element u, Element v) {
  const std::size_t n = l.order();
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xv = l.rdiv(static_cast<Element>(x), v);
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = l.mul(xv, l.ldiv(u, static_cast<Element>(y)));
    }
  }
  return as_loop(QuasigroupTable::from_cells(n, std::move(cells)));
}

/// Smallest subset containing x and closed under multiplication.
inline std::vector<Element> generated_submagma(const LoopTable& l, Element x) {
  std::vector<bool> in(l.order(), false);
  std::vector<Element> members{x};
  in[x] = true;
  // Every product of two members is eventually examined: a new member is
  // multiplied against everything collected before it, on both sides.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {l.mul(members[i], members[j]), l.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::vector<Element> out;
  for (std::size_t y = 0; y < l.order(); ++y) {
    if (in[y]) out.push_back(static_cast<Element>(y));
  }
  return out;
}

}  // namespace osborn
