#include "fintop/monad.hpp"

#include <algorithm>
#include <unordered_map>

namespace fintop {

namespace {

// digit c of point p in a base-`base` tuple encoding
inline Pt digit_of(long long p, int c, int base) {
  for (int i = 0; i < c; ++i) p /= base;
  return Pt(p % base);
}

struct TableHash {
  std::size_t operator()(const std::vector<Pt>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Pt p : v) {
      h ^= std::size_t(p) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Mask table_to_mask(const std::vector<Pt>& t) {
  Mask m = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == 1) m |= Mask(1) << i;
  return m;
}

}  // namespace

MonadInstance monad_at(const FinSpace& a, int n, const Budget& budget) {
  if (n < 0) fail(Errc::invalid_argument, "negative carrier");
  MonadInstance mi;
  mi.base = a;
  mi.carrier = n;
  mi.domain_power = power(a, n, budget).first;
  mi.t_elements = hom_set(mi.domain_power, a, budget);
  const int t = int(mi.t_elements.size());
  const int base = a.points();
  const int np = mi.domain_power.points();

  std::unordered_map<std::vector<Pt>, int, TableHash> t_index;
  for (int j = 0; j < t; ++j) t_index.emplace(mi.t_elements[std::size_t(j)].table(), j);

  // unit: x |-> evaluation at x, i.e. the x-th projection of A^n
  mi.unit.assign(std::size_t(n), -1);
  for (int x = 0; x < n; ++x) {
    std::vector<Pt> proj(std::size_t(np), 0);
    for (int p = 0; p < np; ++p) proj[std::size_t(p)] = digit_of(p, x, base);
    auto it = t_index.find(proj);
    if (it == t_index.end()) fail(Errc::internal_error, "projection missing from T(n)");
    mi.unit[std::size_t(x)] = it->second;
  }

  mi.double_power = power(a, t, budget).first;  // the size gate for T(T(n))

  // canonical map A^n -> A^{T(n)}: coordinate j of eps(w) is t_elements[j](w)
  mi.power_counit.assign(std::size_t(np), 0);
  for (int w = 0; w < np; ++w) {
    long long idx = 0, scale = 1;
    for (int j = 0; j < t; ++j) {
      idx += (long long)mi.t_elements[std::size_t(j)](w) * scale;
      scale *= base;
    }
    mi.power_counit[std::size_t(w)] = Pt(idx);
  }

  // multiplication: Phi |-> Phi . eps, tabulated over the enumeration of
  // Hom(A^{T(n)}, A)
  if (base == 2 && mi.double_power.points() <= 64) {
    std::unordered_map<Mask, int> mask_index;
    for (int j = 0; j < t; ++j)
      mask_index.emplace(table_to_mask(mi.t_elements[std::size_t(j)].table()), j);
    for_each_two_valued_hom(mi.double_power, a, [&](Mask phi) {
      Mask comp = 0;
      for (int w = 0; w < np; ++w)
        if ((phi >> mi.power_counit[std::size_t(w)]) & 1u) comp |= Mask(1) << w;
      auto it = mask_index.find(comp);
      if (it == mask_index.end()) fail(Errc::internal_error, "multiplication left T(n)");
      mi.mult.push_back(std::uint32_t(it->second));
      return true;
    }, budget);
  } else {
    std::vector<Pt> comp(std::size_t(np), 0);
    for_each_hom(mi.double_power, a, [&](const std::vector<Pt>& phi) {
      for (int w = 0; w < np; ++w) comp[std::size_t(w)] = phi[std::size_t(mi.power_counit[std::size_t(w)])];
      auto it = t_index.find(comp);
      if (it == t_index.end()) fail(Errc::internal_error, "multiplication left T(n)");
      mi.mult.push_back(std::uint32_t(it->second));
      return true;
    }, budget);
  }
  return mi;
}

namespace {

// shared mask plumbing for the law checks; only valid when base has 2 points
// and both powers fit in 64 bits
struct MaskOps {
  const MonadInstance& mi;
  std::unordered_map<Mask, int> t_mask_index;

  explicit MaskOps(const MonadInstance& m) : mi(m) {
    for (std::size_t j = 0; j < mi.t_elements.size(); ++j)
      t_mask_index.emplace(table_to_mask(mi.t_elements[j].table()), int(j));
  }

  // mu applied to an arbitrary element of T(T(n)) given as a mask over the
  // double power's points; returns the T(n) index
  int mu_apply(Mask theta) const {
    Mask comp = 0;
    for (int w = 0; w < mi.domain_power.points(); ++w)
      if ((theta >> mi.power_counit[std::size_t(w)]) & 1u) comp |= Mask(1) << w;
    auto it = t_mask_index.find(comp);
    if (it == t_mask_index.end()) fail(Errc::internal_error, "mu landed outside T(n)");
    return it->second;
  }
};

}  // namespace

MonadReport verify_monad(const MonadInstance& mi, const Budget& budget) {
  MonadReport rep;
  rep.subject = "monad carrier=" + std::to_string(mi.carrier) + " base=" +
                std::to_string(mi.base.points()) + "pts";
  const int t = int(mi.t_elements.size());
  const int base = mi.base.points();
  const int np = mi.domain_power.points();
  const int dp = mi.double_power.points();

  LawRecord right{"mu . eta_T = id", "pointwise over T(n)"};
  LawRecord left{"mu . T(eta) = id", "pointwise over T(n)"};
  LawRecord assoc{"mu . T(mu) = mu . mu_T", "defining-equation reduction over T(T(n))"};

  // targets in T(T(n)): for each Phi, the projection pi_Phi and Phi . A^eta
  std::vector<std::vector<Pt>> proj_target(std::size_t(t), std::vector<Pt>(std::size_t(dp), 0));
  std::vector<std::vector<Pt>> teta_target(std::size_t(t), std::vector<Pt>(std::size_t(dp), 0));
  std::vector<Pt> eta_pm(std::size_t(dp), 0);  // A^{eta} : A^{T(n)} -> A^n pointwise
  for (int p = 0; p < dp; ++p) {
    long long idx = 0, scale = 1;
    for (int x = 0; x < mi.carrier; ++x) {
      idx += (long long)digit_of(p, mi.unit[std::size_t(x)], base) * scale;
      scale *= base;
    }
    eta_pm[std::size_t(p)] = Pt(idx);
  }
  for (int j = 0; j < t; ++j)
    for (int p = 0; p < dp; ++p) {
      proj_target[std::size_t(j)][std::size_t(p)] = digit_of(p, j, base);
      teta_target[std::size_t(j)][std::size_t(p)] =
          mi.t_elements[std::size_t(j)](eta_pm[std::size_t(p)]);
    }

  std::vector<int> proj_found(std::size_t(t), -1), teta_found(std::size_t(t), -1);

  auto note_element = [&](std::size_t i, const std::vector<Pt>& psi) {
    for (int j = 0; j < t; ++j) {
      if (proj_found[std::size_t(j)] < 0 && psi == proj_target[std::size_t(j)])
        proj_found[std::size_t(j)] = int(i);
      if (teta_found[std::size_t(j)] < 0 && psi == teta_target[std::size_t(j)])
        teta_found[std::size_t(j)] = int(i);
    }
  };

  // one pass over T(T(n)) re-deriving the multiplication from its defining
  // equation and locating the unit-law targets
  std::unordered_map<std::vector<Pt>, int, TableHash> t_index;
  for (int j = 0; j < t; ++j) t_index.emplace(mi.t_elements[std::size_t(j)].table(), j);
  std::size_t i = 0;
  if (base == 2 && dp <= 64) {
    std::vector<Mask> proj_mask(std::size_t(t), 0), teta_mask(std::size_t(t), 0);
    for (int j = 0; j < t; ++j) {
      proj_mask[std::size_t(j)] = table_to_mask(proj_target[std::size_t(j)]);
      teta_mask[std::size_t(j)] = table_to_mask(teta_target[std::size_t(j)]);
    }
    MaskOps ops(mi);
    for_each_two_valued_hom(mi.double_power, mi.base, [&](Mask psi) {
      ++assoc.checked;
      if (ops.mu_apply(psi) != int(mi.mult[i]))
        assoc.violations.push_back("mult table disagrees with its defining equation at index " +
                                   std::to_string(i));
      for (int j = 0; j < t; ++j) {
        if (proj_found[std::size_t(j)] < 0 && psi == proj_mask[std::size_t(j)])
          proj_found[std::size_t(j)] = int(i);
        if (teta_found[std::size_t(j)] < 0 && psi == teta_mask[std::size_t(j)])
          teta_found[std::size_t(j)] = int(i);
      }
      ++i;
      return true;
    }, budget);
  } else {
    std::vector<Pt> comp(std::size_t(np), 0);
    for_each_hom(mi.double_power, mi.base, [&](const std::vector<Pt>& psi) {
      ++assoc.checked;
      for (int w = 0; w < np; ++w)
        comp[std::size_t(w)] = psi[std::size_t(mi.power_counit[std::size_t(w)])];
      auto it = t_index.find(comp);
      if (it == t_index.end() || it->second != int(mi.mult[i]))
        assoc.violations.push_back("mult table disagrees with its defining equation at index " +
                                   std::to_string(i));
      note_element(i, psi);
      ++i;
      return true;
    }, budget);
  }
  if (i != mi.mult.size())
    assoc.violations.push_back("enumeration of T(T(n)) changed size");

  for (int j = 0; j < t; ++j) {
    ++right.checked;
    if (proj_found[std::size_t(j)] < 0 || int(mi.mult[std::size_t(proj_found[std::size_t(j)])]) != j)
      right.violations.push_back("mu(pi_Phi) != Phi at T index " + std::to_string(j));
    ++left.checked;
    if (teta_found[std::size_t(j)] < 0 || int(mi.mult[std::size_t(teta_found[std::size_t(j)])]) != j)
      left.violations.push_back("mu(T(eta)(Phi)) != Phi at T index " + std::to_string(j));
  }

  // raw pointwise associativity over T^3 where the triple power is enumerable
  LawRecord full{"mu . T(mu) = mu . mu_T", "pointwise over T(T(T(n)))"};
  const std::size_t t2 = mi.mult.size();
  if (base == 1) {
    full.checked = 1;  // all sets involved are singletons
  } else if (base == 2 && t2 <= 6 && dp <= 64) {
    // T(T(n)) is small enough to index the triple power's coordinates
    std::vector<Mask> t2_masks;
    for_each_two_valued_hom(mi.double_power, mi.base, [&](Mask m) {
      t2_masks.push_back(m);
      return true;
    }, budget);
    FinSpace power3 = power(mi.base, int(t2), budget).first;
    const int p3 = power3.points();
    std::vector<Pt> pm_eps2(std::size_t(dp), 0), pm_amu(std::size_t(dp), 0);
    for (int p = 0; p < dp; ++p) {
      long long e = 0, m = 0, scale = 1;
      for (std::size_t j = 0; j < t2; ++j) {
        e += (long long)((t2_masks[j] >> p) & 1u) * scale;
        m += (long long)digit_of(p, int(mi.mult[j]), base) * scale;
        scale *= base;
      }
      pm_eps2[std::size_t(p)] = Pt(e);
      pm_amu[std::size_t(p)] = Pt(m);
    }
    MaskOps ops(mi);
    (void)p3;
    for_each_two_valued_hom(power3, mi.base, [&](Mask psi) {
      ++full.checked;
      Mask via_tmu = 0, via_mut = 0;
      for (int p = 0; p < dp; ++p) {
        if ((psi >> pm_amu[std::size_t(p)]) & 1u) via_tmu |= Mask(1) << p;
        if ((psi >> pm_eps2[std::size_t(p)]) & 1u) via_mut |= Mask(1) << p;
      }
      if (ops.mu_apply(via_tmu) != ops.mu_apply(via_mut))
        full.violations.push_back("associativity fails at T^3 element " +
                                  std::to_string(full.checked - 1));
      return true;
    }, budget);
  } else {
    full.skipped = true;
    full.method = "skipped: triple power exceeds the mask budget";
  }

  rep.laws = {right, left, assoc, full};
  return rep;
}

// ------------------------------------------------------------ counit

CMap counit(const FinSpace& a, const FinSpace& b, const Budget& budget) {
  std::vector<CMap> homs = hom_set(b, a, budget);
  const int k = int(homs.size());
  FinSpace pw = power(a, k, budget).first;
  const int base = a.points();
  std::vector<Pt> tab(std::size_t(b.points()), 0);
  for (int p = 0; p < b.points(); ++p) {
    long long idx = 0, scale = 1;
    for (int g = 0; g < k; ++g) {
      idx += (long long)homs[std::size_t(g)](p) * scale;
      scale *= base;
    }
    tab[std::size_t(p)] = Pt(idx);
  }
  CMap eps(b, pw, std::move(tab));
  // the defining equations pi_g . eps = g, checked exhaustively
  for (int g = 0; g < k; ++g)
    for (int p = 0; p < b.points(); ++p)
      if (digit_of(eps(p), g, base) != homs[std::size_t(g)](p))
        fail(Errc::internal_error, "counit violates its defining equation");
  return eps;
}

CounitTable counit_table(const FinSpace& a, const FinSpace& b, const Budget& budget) {
  CounitTable out;
  out.homs = hom_set(b, a, budget);
  out.coords.assign(std::size_t(b.points()), std::vector<Pt>(out.homs.size()));
  for (int p = 0; p < b.points(); ++p)
    for (std::size_t g = 0; g < out.homs.size(); ++g)
      out.coords[std::size_t(p)][g] = out.homs[g](p);
  return out;
}

// ------------------------------------------------------------ algebras

EMAlgebra comparison_algebra(const FinSpace& a, const FinSpace& b, const Budget& budget) {
  EMAlgebra alg;
  alg.base = a;
  alg.b = b;
  alg.carrier = hom_set(b, a, budget);
  const int k = int(alg.carrier.size());
  alg.carrier_power = power(a, k, budget).first;
  alg.counit_map = counit(a, b, budget);
  if (!(alg.counit_map.cod() == alg.carrier_power))
    fail(Errc::internal_error, "counit codomain mismatch");

  // materialize the structure table when T(carrier) is enumerable
  if (alg.carrier_power.points() <= 16) {
    std::unordered_map<std::vector<Pt>, int, TableHash> carrier_index;
    for (int j = 0; j < k; ++j) carrier_index.emplace(alg.carrier[std::size_t(j)].table(), j);
    std::vector<Pt> comp(std::size_t(b.points()), 0);
    for_each_hom(alg.carrier_power, a, [&](const std::vector<Pt>& phi) {
      for (int p = 0; p < b.points(); ++p)
        comp[std::size_t(p)] = phi[std::size_t(alg.counit_map(p))];
      auto it = carrier_index.find(comp);
      if (it == carrier_index.end()) fail(Errc::internal_error, "structure left the carrier");
      alg.structure.push_back(std::uint32_t(it->second));
      return true;
    }, budget);
    alg.structure_materialized = true;
  }
  return alg;
}

MonadReport verify_algebra(const EMAlgebra& alg, const Budget& budget) {
  MonadReport rep;
  rep.subject = "algebra carrier=" + std::to_string(alg.carrier.size()) + " base=" +
                std::to_string(alg.base.points()) + "pts";
  const int k = int(alg.carrier.size());
  const int base = alg.base.points();
  const int cp = alg.carrier_power.points();

  LawRecord unit{"a . eta = id", "counit equations over the carrier"};
  for (int j = 0; j < k; ++j) {
    ++unit.checked;
    // a(pi_j) = pi_j . eps, which must be the j-th carrier element
    bool ok = true;
    for (int p = 0; p < alg.b.points(); ++p)
      ok = ok && digit_of(alg.counit_map(p), j, base) == alg.carrier[std::size_t(j)](p);
    if (!ok) unit.violations.push_back("a(pi_" + std::to_string(j) + ") is not carrier element " +
                                       std::to_string(j));
  }

  LawRecord action{"a . T(a) = a . mu", ""};
  if (alg.structure_materialized) {
    action.method = "defining-equation reduction over T(carrier)";
    std::unordered_map<std::vector<Pt>, int, TableHash> carrier_index;
    for (int j = 0; j < k; ++j) carrier_index.emplace(alg.carrier[std::size_t(j)].table(), j);
    std::size_t i = 0;
    std::vector<Pt> comp(std::size_t(alg.b.points()), 0);
    std::vector<std::vector<Pt>> t_tables;
    for_each_hom(alg.carrier_power, alg.base, [&](const std::vector<Pt>& phi) {
      ++action.checked;
      for (int p = 0; p < alg.b.points(); ++p)
        comp[std::size_t(p)] = phi[std::size_t(alg.counit_map(p))];
      auto it = carrier_index.find(comp);
      if (it == carrier_index.end() || it->second != int(alg.structure[i]))
        action.violations.push_back("structure disagrees with composition at index " +
                                    std::to_string(i));
      t_tables.push_back(phi);
      ++i;
      return true;
    }, budget);

    // unit law through the table as well: the projection's entry must return j
    for (int j = 0; j < k; ++j) {
      for (std::size_t idx = 0; idx < t_tables.size(); ++idx) {
        bool is_proj = true;
        for (int p = 0; p < cp && is_proj; ++p)
          is_proj = t_tables[idx][std::size_t(p)] == digit_of(p, j, base);
        if (is_proj) {
          ++unit.checked;
          if (int(alg.structure[idx]) != j)
            unit.violations.push_back("structure at pi_" + std::to_string(j) +
                                      " is not the identity");
          break;
        }
      }
    }

    // full pointwise action law where the double power is enumerable
    const std::size_t t_size = alg.structure.size();
    if (base == 2 && t_size <= 6 && cp <= 64) {
      action.method += " + pointwise over T(T(carrier))";
      std::vector<Mask> t_masks;
      t_masks.reserve(t_size);
      for (const auto& tab : t_tables) t_masks.push_back(table_to_mask(tab));
      FinSpace power2 = power(alg.base, int(t_size), budget).first;
      std::vector<Pt> pm_eps(std::size_t(cp), 0), pm_aa(std::size_t(cp), 0);
      for (int p = 0; p < cp; ++p) {
        long long e = 0, m = 0, scale = 1;
        for (std::size_t j = 0; j < t_size; ++j) {
          e += (long long)((t_masks[j] >> p) & 1u) * scale;
          m += (long long)digit_of(p, int(alg.structure[j]), base) * scale;
          scale *= base;
        }
        pm_eps[std::size_t(p)] = Pt(e);
        pm_aa[std::size_t(p)] = Pt(m);
      }
      std::unordered_map<Mask, int> t_mask_index;
      for (std::size_t j = 0; j < t_size; ++j) t_mask_index.emplace(t_masks[j], int(j));
      for_each_two_valued_hom(power2, alg.base, [&](Mask psi) {
        ++action.checked;
        Mask via_ta = 0, via_mu = 0;
        for (int p = 0; p < cp; ++p) {
          if ((psi >> pm_aa[std::size_t(p)]) & 1u) via_ta |= Mask(1) << p;
          if ((psi >> pm_eps[std::size_t(p)]) & 1u) via_mu |= Mask(1) << p;
        }
        auto i1 = t_mask_index.find(via_ta);
        auto i2 = t_mask_index.find(via_mu);
        if (i1 == t_mask_index.end() || i2 == t_mask_index.end() ||
            alg.structure[std::size_t(i1->second)] != alg.structure[std::size_t(i2->second)])
          action.violations.push_back("action law fails pointwise");
        return true;
      }, budget);
    }
  } else {
    // T(carrier) is not enumerable; the reduction leaves exactly the counit
    // equations, which are checked per carrier element
    action.method = "reduction to counit equations (structure implicit)";
    for (int j = 0; j < k; ++j) {
      ++action.checked;
      for (int p = 0; p < alg.b.points(); ++p)
        if (digit_of(alg.counit_map(p), j, base) != alg.carrier[std::size_t(j)](p)) {
          action.violations.push_back("counit equation fails at carrier element " +
                                      std::to_string(j));
          break;
        }
    }
  }

  rep.laws = {unit, action};
  return rep;
}

// ------------------------------------------------------------ split mono

std::optional<CMap> split_mono(const CMap& f) {
  std::vector<std::pair<Pt, Pt>> pins;
  pins.reserve(f.table().size());
  for (int x = 0; x < f.dom().points(); ++x) pins.emplace_back(f(x), x);
  auto t = find_hom_with_pins(f.cod(), f.dom(), pins);
  if (!t) return std::nullopt;
  return CMap(f.cod(), f.dom(), std::move(*t));
}

// ------------------------------------------------------------ probe

ProbeReport faithfulness_probe(const FinSpace& a, int n_max, const Budget& budget) {
  ProbeReport rep;
  rep.subject = "base=" + std::to_string(a.points()) + "pts";
  rep.n_max = n_max;
  Subcategory hull = Subcategory::hull_of(a);
  auto reps = member_reps([](const FinSpace&) { return true; }, n_max);
  std::vector<int> members;

  for (std::size_t i = 0; i < reps.size(); ++i) {
    const FinSpace& b = reps[i];
    std::string id = "B#" + std::to_string(i) + "(" + std::to_string(b.points()) + "pts)";
    CMap eps;
    try {
      eps = counit(a, b, budget);
    } catch (const Error& e) {
      if (e.code() == Errc::size_budget_exceeded) {
        rep.records.push_back({id + " counit", "skipped-budget", e.what()});
        continue;
      }
      throw;
    }
    const bool is_member = split_mono(eps).has_value();
    if (is_member) members.push_back(int(i));

    if (a.is_indiscrete() && a.points() >= 2 && b.is_indiscrete() && b.points() > 0) {
      // with at least two indiscrete base points, functions separate points,
      // so every nonempty indiscrete space is a retract of a power; the empty
      // space is excluded since powers of a nonempty space are nonempty
      rep.records.push_back({id + " counit-splits", is_member ? "pass" : "fail",
                             "nonempty indiscrete spaces are retracts of powers"});
    }
    if (is_member) {
      bool ok = false;
      std::string note;
      try {
        ok = regular_mono_in(hull, eps, budget);
      } catch (const Error& e) {
        note = e.what();
      }
      rep.records.push_back({id + " counit-regular-mono", ok ? "pass" : "fail", note});
    }
  }

  // maps between members inducing bijections on Hom(-, A) must be
  // homeomorphisms
  std::size_t iso_checked = 0, iso_bad = 0;
  for (int i : members)
    for (int j : members)
      for (const CMap& f : hom_set(reps[std::size_t(i)], reps[std::size_t(j)], budget))
        if (orthogonal_along(a, f, budget)) {
          ++iso_checked;
          if (!is_iso(f)) ++iso_bad;
        }
  rep.records.push_back({"orthogonal-maps-are-isos", iso_bad == 0 ? "pass" : "fail",
                         std::to_string(iso_checked) + " orthogonal maps between hull members"});
  return rep;
}

}  // namespace fintop
