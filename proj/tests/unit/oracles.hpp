#pragma once

// Brute-force reference computations used only by the tests. Each one
// works from definitions over a finite box and shares no code with the
// engines it checks beyond the Monomial value type.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "stanley/monomial.hpp"

namespace oracle {

using stanley::Exponent;
using stanley::Monomial;

using Exps = std::vector<Exponent>;

inline bool divides(const Exps &a, const Exps &b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j])
      return false;
  return true;
}

inline bool member(const std::vector<Exps> &gens, const Exps &u) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Exps &g) { return divides(g, u); });
}

inline Exps exps(const Monomial &u) {
  return Exps(u.exponents().begin(), u.exponents().end());
}

inline std::vector<Exps> exps(const std::vector<Monomial> &us) {
  std::vector<Exps> out;
  for (const Monomial &u : us)
    out.push_back(exps(u));
  return out;
}

/// Calls f on every point of the box [0, hi].
inline void for_box(const Exps &hi, const std::function<void(const Exps &)> &f) {
  Exps u(hi.size(), 0);
  while (true) {
    f(u);
    std::size_t j = 0;
    while (j < u.size() && u[j] == hi[j])
      u[j++] = 0;
    if (j == u.size())
      return;
    ++u[j];
  }
}

/// Minimal elements of {u in box : pred(u)} by pairwise comparison.
inline std::vector<Exps> minimal_elements(const Exps &hi,
                                          const std::function<bool(const Exps &)> &pred) {
  std::vector<Exps> in;
  for_box(hi, [&](const Exps &u) {
    if (pred(u))
      in.push_back(u);
  });
  std::vector<Exps> out;
  for (const Exps &u : in) {
    bool minimal = true;
    for (const Exps &w : in)
      if (w != u && divides(w, u))
        minimal = false;
    if (minimal)
      out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Exps> sorted(std::vector<Monomial> us) {
  std::vector<Exps> out = exps(us);
  std::sort(out.begin(), out.end());
  return out;
}

/// Stanley depth by exhaustive search over all interval partitions of the
/// characteristic poset in the box [0, g], with arbitrary intervals.
/// Only for posets of a couple of dozen points.
inline int sdepth_brute(const std::vector<Exps> &gens, const Exps &g) {
  std::vector<Exps> pts;
  for_box(g, [&](const Exps &u) {
    if (member(gens, u))
      pts.push_back(u);
  });
  const std::size_t n = g.size();
  auto rho = [&](const Exps &d) {
    int r = 0;
    for (std::size_t j = 0; j < n; ++j)
      r += d[j] == g[j];
    return r;
  };
  auto index = [&](const Exps &u) {
    return static_cast<std::size_t>(
        std::lower_bound(pts.begin(), pts.end(), u,
                         [](const Exps &a, const Exps &b) {
                           return std::lexicographical_compare(
                               a.begin(), a.end(), b.begin(), b.end());
                         }) -
        pts.begin());
  };
  std::sort(pts.begin(), pts.end());
  std::vector<bool> used(pts.size(), false);
  // Best achievable min rho from the current state, or -1 if stuck.
  std::function<int()> go = [&]() -> int {
    std::size_t p = 0;
    while (p < pts.size() && used[p])
      ++p;
    if (p == pts.size())
      return static_cast<int>(n);
    int best = -1;
    const Exps &c = pts[p];
    for_box(g, [&](const Exps &d) {
      if (!divides(c, d))
        return;
      std::vector<std::size_t> cells;
      bool ok = true;
      for_box(d, [&](const Exps &u) {
        if (!ok || !divides(c, u))
          return;
        std::size_t i = index(u);
        if (used[i])
          ok = false;
        else
          cells.push_back(i);
      });
      if (!ok || rho(d) <= best)
        return;
      for (std::size_t i : cells)
        used[i] = true;
      best = std::max(best, std::min(rho(d), go()));
      for (std::size_t i : cells)
        used[i] = false;
    });
    return best;
  };
  return go();
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace oracle
