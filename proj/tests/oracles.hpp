// Test-only oracles, kept independent of the library's production paths:
// everything here works straight from the open-set definitions by exhaustive
// search.
#ifndef FINTOP_TESTS_ORACLES_HPP
#define FINTOP_TESTS_ORACLES_HPP

#include <vector>

#include "fintop/space.hpp"

namespace oracles {

using fintop::CMap;
using fintop::FinSpace;
using fintop::Mask;
using fintop::Pt;

inline Mask preimage(const std::vector<Pt>& tab, Mask v) {
  Mask pre = 0;
  for (std::size_t x = 0; x < tab.size(); ++x)
    if ((v >> tab[x]) & 1u) pre |= Mask(1) << x;
  return pre;
}

// continuity straight from the definition: preimages of opens are open
inline bool continuous_by_definition(const FinSpace& dom, const FinSpace& cod,
                                     const std::vector<Pt>& tab) {
  for (Mask v : cod.opens())
    if (!dom.is_open64(preimage(tab, v))) return false;
  return true;
}

// embedding straight from the definition: injective, and every open of the
// domain arises as a preimage
inline bool embedding_by_definition(const CMap& f) {
  if (!f.injective()) return false;
  auto cod_opens = f.cod().opens();
  for (Mask u : f.dom().opens()) {
    bool found = false;
    for (Mask v : cod_opens)
      if (preimage(f.table(), v) == u) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// every function table dom -> cod, filtered by definitional continuity
inline std::vector<std::vector<Pt>> all_continuous_tables(const FinSpace& dom,
                                                          const FinSpace& cod) {
  std::vector<std::vector<Pt>> out;
  const int n = dom.points(), m = cod.points();
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<Pt> tab(std::size_t(n), 0);
  for (;;) {
    if (continuous_by_definition(dom, cod, tab)) out.push_back(tab);
    int i = 0;
    while (i < n && tab[std::size_t(i)] == m - 1) tab[std::size_t(i++)] = 0;
    if (i == n) break;
    ++tab[std::size_t(i)];
  }
  return out;
}

// two spaces are homeomorphic iff some bijection is a homeomorphism
inline bool homeomorphic_by_search(const FinSpace& a, const FinSpace& b) {
  if (a.points() != b.points()) return false;
  std::vector<Pt> perm(std::size_t(a.points()));
  for (int i = 0; i < a.points(); ++i) perm[std::size_t(i)] = i;
  do {
    bool ok = true;
    for (int x = 0; x < a.points() && ok; ++x)
      for (int y = 0; y < a.points() && ok; ++y)
        ok = a.leq(x, y) == b.leq(perm[std::size_t(x)], perm[std::size_t(y)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.points() == 0;
}

}  // namespace oracles

#endif
