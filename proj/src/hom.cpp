#include "fintop/hom.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace fintop {

std::vector<Pt> linear_extension(const FinSpace& x) {
  const int n = x.points();
  std::vector<int> below(std::size_t(n), 0);  // # of strictly-below points not yet removed
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (q != p && x.leq(q, p) && !x.leq(p, q)) ++below[std::size_t(p)];
  std::vector<char> removed(std::size_t(n), 0);
  std::vector<Pt> out;
  out.reserve(std::size_t(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int p = 0; p < n; ++p)
      if (!removed[std::size_t(p)] && below[std::size_t(p)] == 0) {
        pick = p;
        break;
      }
    if (pick < 0) fail(Errc::internal_error, "preorder has no minimal point");
    removed[std::size_t(pick)] = 1;
    out.push_back(pick);
    for (int q = 0; q < n; ++q)
      if (!removed[std::size_t(q)] && x.leq(pick, q) && !x.leq(q, pick)) --below[std::size_t(q)];
  }
  return out;
}

namespace {

struct GeneralEnum {
  const FinSpace& x;
  const FinSpace& a;
  const std::function<bool(const std::vector<Pt>&)>& visit;
  std::size_t cap;
  std::vector<Pt> lin;
  std::vector<Mask> up_a, down_a;  // codomain relation masks, |a| <= 64
  std::vector<Pt> tab;
  std::vector<Mask> cand;  // candidate codomain values per point
  std::size_t emitted = 0;
  bool aborted = false;

  bool run() {
    const int n = x.points();
    const int m = a.points();
    if (m == 0) {
      if (n == 0) emit();
      return !aborted;
    }
    if (m > 64) fail(Errc::size_budget_exceeded, "codomain larger than 64 points");
    lin = linear_extension(x);
    up_a.assign(std::size_t(m), 0);
    down_a.assign(std::size_t(m), 0);
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        if (a.leq(v, w)) up_a[std::size_t(v)] |= Mask(1) << w;
        if (a.leq(w, v)) down_a[std::size_t(v)] |= Mask(1) << w;
      }
    tab.assign(std::size_t(n), 0);
    const Mask all = (m == 64) ? ~Mask(0) : ((Mask(1) << m) - 1);
    cand.assign(std::size_t(n), all);
    rec(0);
    return !aborted;
  }

  void emit() {
    if (++emitted > cap) fail(Errc::size_budget_exceeded, "hom enumeration larger than budget");
    if (!visit(tab)) aborted = true;
  }

  void rec(int i) {
    if (aborted) return;
    const int n = x.points();
    if (i == n) {
      emit();
      return;
    }
    const Pt p = lin[std::size_t(i)];
    Mask options = cand[std::size_t(p)];
    while (options && !aborted) {
      const int v = std::countr_zero(options);
      options &= options - 1;
      tab[std::size_t(p)] = v;
      // narrow candidates of later points sharing a relation with p
      std::vector<std::pair<int, Mask>> saved;
      bool dead = false;
      for (int j = i + 1; j < n; ++j) {
        const Pt r = lin[std::size_t(j)];
        Mask mrk = cand[std::size_t(r)];
        Mask nrk = mrk;
        if (x.leq(p, r)) nrk &= up_a[std::size_t(v)];
        if (x.leq(r, p)) nrk &= down_a[std::size_t(v)];
        if (nrk != mrk) {
          saved.emplace_back(r, mrk);
          cand[std::size_t(r)] = nrk;
          if (nrk == 0) {
            dead = true;
            break;
          }
        }
      }
      if (!dead) rec(i + 1);
      for (auto& [r, old] : saved) cand[std::size_t(r)] = old;
    }
  }
};

struct TwoValuedEnum {
  const FinSpace& x;
  const std::function<bool(Mask)>& visit;
  std::size_t cap;
  bool a01 = false, a10 = false;  // codomain relation 0<=1, 1<=0
  std::vector<Pt> lin;
  std::vector<Mask> up_x, down_x;
  std::size_t emitted = 0;
  bool aborted = false;

  bool run() {
    const int n = x.points();
    lin = linear_extension(x);
    up_x.assign(std::size_t(n), 0);
    down_x.assign(std::size_t(n), 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (x.leq(p, q)) up_x[std::size_t(p)] |= Mask(1) << q;
        if (x.leq(q, p)) down_x[std::size_t(p)] |= Mask(1) << q;
      }
    rec(0, 0, 0, 0);
    return !aborted;
  }

  void emit(Mask ones) {
    if (++emitted > cap) fail(Errc::size_budget_exceeded, "hom enumeration larger than budget");
    if (!visit(ones)) aborted = true;
  }

  void rec(int i, Mask ones, Mask forced1, Mask forced0) {
    if (aborted) return;
    const int n = x.points();
    if (i == n) {
      emit(ones);
      return;
    }
    const Pt p = lin[std::size_t(i)];
    const Mask bit = Mask(1) << p;
    const bool can0 = !(forced1 & bit);
    const bool can1 = !(forced0 & bit);
    if (can0) {
      Mask f0 = forced0;
      if (!a01) f0 |= up_x[std::size_t(p)];    // 0 !<= 1: everything above stays 0
      if (!a10) f0 |= down_x[std::size_t(p)];  // 1 !<= 0: everything below stays 0
      rec(i + 1, ones, forced1, f0);
    }
    if (can1 && !aborted) {
      Mask f1 = forced1;
      if (!a10) f1 |= up_x[std::size_t(p)];
      if (!a01) f1 |= down_x[std::size_t(p)];
      rec(i + 1, ones | bit, f1, forced0);
    }
  }
};

}  // namespace

bool for_each_hom(const FinSpace& x, const FinSpace& a,
                  const std::function<bool(const std::vector<Pt>&)>& visit, const Budget& budget) {
  GeneralEnum e{x, a, visit, budget.max_maps, {}, {}, {}, {}, {}, 0, false};
  return e.run();
}

bool for_each_two_valued_hom(const FinSpace& x, const FinSpace& a,
                             const std::function<bool(Mask)>& visit, const Budget& budget) {
  if (a.points() != 2) fail(Errc::invalid_argument, "fast hom path needs a 2-point codomain");
  if (x.points() > 64) fail(Errc::size_budget_exceeded, "fast hom path needs <= 64 domain points");
  TwoValuedEnum e{x, visit, budget.max_maps, a.leq(0, 1), a.leq(1, 0), {}, {}, {}, 0, false};
  return e.run();
}

namespace {

struct PinnedSearch {
  const FinSpace& x;
  const FinSpace& a;
  std::uint64_t node_cap;
  std::vector<Pt> lin;
  std::vector<Mask> up_a, down_a;
  std::vector<Mask> cand;
  std::vector<Pt> tab;
  std::uint64_t nodes = 0;

  std::optional<std::vector<Pt>> run(const std::vector<std::pair<Pt, Pt>>& pins) {
    const int n = x.points();
    const int m = a.points();
    if (m > 64) fail(Errc::size_budget_exceeded, "pinned search needs <= 64 codomain points");
    if (m == 0) {
      if (n == 0 && pins.empty()) return std::vector<Pt>{};
      return std::nullopt;
    }
    const Mask all = (m == 64) ? ~Mask(0) : ((Mask(1) << m) - 1);
    cand.assign(std::size_t(n), all);
    for (auto [p, v] : pins) {
      if (p < 0 || p >= n || v < 0 || v >= m) fail(Errc::invalid_argument, "pin out of range");
      cand[std::size_t(p)] &= Mask(1) << v;
      if (!cand[std::size_t(p)]) return std::nullopt;
    }
    up_a.assign(std::size_t(m), 0);
    down_a.assign(std::size_t(m), 0);
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        if (a.leq(v, w)) up_a[std::size_t(v)] |= Mask(1) << w;
        if (a.leq(w, v)) down_a[std::size_t(v)] |= Mask(1) << w;
      }
    // seed propagation from the pins before searching
    for (auto [p, v] : pins)
      for (int q = 0; q < n; ++q) {
        if (q == p) continue;
        if (x.leq(p, q)) cand[std::size_t(q)] &= up_a[std::size_t(v)];
        if (x.leq(q, p)) cand[std::size_t(q)] &= down_a[std::size_t(v)];
        if (!cand[std::size_t(q)]) return std::nullopt;
      }
    lin = linear_extension(x);
    tab.assign(std::size_t(n), 0);
    if (rec(0)) return tab;
    return std::nullopt;
  }

  bool rec(int i) {
    const int n = x.points();
    if (i == n) return true;
    if (++nodes > node_cap) fail(Errc::size_budget_exceeded, "pinned hom search exceeded node cap");
    const Pt p = lin[std::size_t(i)];
    Mask options = cand[std::size_t(p)];
    while (options) {
      const int v = std::countr_zero(options);
      options &= options - 1;
      tab[std::size_t(p)] = v;
      std::vector<std::pair<int, Mask>> saved;
      bool dead = false;
      for (int j = i + 1; j < n; ++j) {
        const Pt r = lin[std::size_t(j)];
        Mask old = cand[std::size_t(r)];
        Mask now = old;
        if (x.leq(p, r)) now &= up_a[std::size_t(v)];
        if (x.leq(r, p)) now &= down_a[std::size_t(v)];
        if (now != old) {
          saved.emplace_back(r, old);
          cand[std::size_t(r)] = now;
          if (!now) {
            dead = true;
            break;
          }
        }
      }
      if (!dead && rec(i + 1)) return true;
      for (auto& [r, old] : saved) cand[std::size_t(r)] = old;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Pt>> find_hom_with_pins(const FinSpace& x, const FinSpace& a,
                                                  const std::vector<std::pair<Pt, Pt>>& pins,
                                                  std::uint64_t node_cap) {
  PinnedSearch s{x, a, node_cap, {}, {}, {}, {}, {}, 0};
  return s.run(pins);
}

std::size_t hom_count(const FinSpace& x, const FinSpace& a, const Budget& budget) {
  std::size_t c = 0;
  if (a.points() == 2 && x.points() <= 64) {
    for_each_two_valued_hom(x, a, [&](Mask) { ++c; return true; }, budget);
  } else {
    for_each_hom(x, a, [&](const std::vector<Pt>&) { ++c; return true; }, budget);
  }
  return c;
}

std::vector<CMap> hom_set(const FinSpace& x, const FinSpace& a, const Budget& budget) {
  std::vector<std::vector<Pt>> tables;
  for_each_hom(x, a, [&](const std::vector<Pt>& t) {
    tables.push_back(t);
    return true;
  }, budget);
  std::sort(tables.begin(), tables.end());
  std::vector<CMap> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.emplace_back(x, a, std::move(t));
  return out;
}

namespace {

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

}  // namespace

bool injective_along(const FinSpace& a, const CMap& f, const Budget& budget) {
  std::unordered_set<std::vector<Pt>, TableHash> restrictions;
  const std::vector<Pt>& tab = f.table();
  for_each_hom(f.cod(), a, [&](const std::vector<Pt>& h) {
    std::vector<Pt> r(tab.size());
    for (std::size_t i = 0; i < tab.size(); ++i) r[i] = h[std::size_t(tab[i])];
    restrictions.insert(std::move(r));
    return true;
  }, budget);
  bool all_extend = true;
  for_each_hom(f.dom(), a, [&](const std::vector<Pt>& g) {
    if (!restrictions.count(g)) {
      all_extend = false;
      return false;
    }
    return true;
  }, budget);
  return all_extend;
}

bool orthogonal_along(const FinSpace& a, const CMap& f, const Budget& budget) {
  std::unordered_set<std::vector<Pt>, TableHash> restrictions;
  const std::vector<Pt>& tab = f.table();
  std::size_t total = 0;
  for_each_hom(f.cod(), a, [&](const std::vector<Pt>& h) {
    ++total;
    std::vector<Pt> r(tab.size());
    for (std::size_t i = 0; i < tab.size(); ++i) r[i] = h[std::size_t(tab[i])];
    restrictions.insert(std::move(r));
    return true;
  }, budget);
  if (restrictions.size() != total) return false;          // Hom(f,A) not injective
  return restrictions.size() == hom_count(f.dom(), a, budget);  // and surjective
}

bool clopen_lifting(const CMap& m) {
  if (!is_embedding(m)) fail(Errc::not_an_embedding, "clopen lifting is defined for embeddings");
  auto dom_clopens = m.dom().clopens();
  auto cod_clopens = m.cod().clopens();
  for (Mask g : dom_clopens) {
    bool lifted = false;
    for (Mask h : cod_clopens) {
      Mask pre = 0;
      for (std::size_t i = 0; i < m.table().size(); ++i)
        if ((h >> m.table()[i]) & 1u) pre |= Mask(1) << i;
      if (pre == g) {
        lifted = true;
        break;
      }
    }
    if (!lifted) return false;
  }
  return true;
}

StabilityVerdict pushout_stability(const Subcategory& ctx, const CMap& m, int bound,
                                   const Budget& budget) {
  if (!is_embedding(m)) fail(Errc::not_an_embedding, "pushout stability is defined for embeddings");
  if (!ctx.ambient_member(m.dom()) || !ctx.ambient_member(m.cod()))
    fail(Errc::not_in_subcategory, "domain or codomain outside " + ctx.name());
  StabilityVerdict verdict;
  verdict.bound = bound;
  for (const FinSpace& z : member_reps([&](const FinSpace& s) { return ctx.ambient_member(s); }, bound)) {
    for (const CMap& f : hom_set(m.dom(), z, budget)) {
      Cospan po = pushout(m, f, budget);
      Reflection r = ctx.ambient_reflect(po.right.cod(), budget);
      CMap leg = compose(r.arrow, po.right);  // pushout of m along f, reflected
      if (!is_embedding(leg)) {
        verdict.status = StabilityVerdict::Status::counterexample;
        verdict.witness = StabilityVerdict::Witness{f, leg};
        return verdict;
      }
    }
  }
  return verdict;
}

namespace {

SweepReport run_sweep(const std::string& label, const std::vector<FinSpace>& reps,
                      const FinSpace& a, int n_max, SweepMode mode, const Budget& budget) {
  SweepReport rep;
  rep.context = label;
  rep.mode = mode;
  rep.n_max = n_max;
  rep.spaces = reps.size();
  if (mode == SweepMode::inj_vs_clopen_lifting) rep.clopen_failure_found = false;
  for (const FinSpace& x : reps)
    for (const FinSpace& y : reps)
      for (const CMap& m : hom_set(x, y, budget)) {
        ++rep.maps;
        const bool inj = injective_along(a, m, budget);
        bool ref = false;
        const bool emb = is_embedding(m);
        if (mode == SweepMode::inj_vs_embedding) {
          ref = emb;
        } else {
          ref = emb && clopen_lifting(m);
          if (emb && !clopen_lifting(m)) rep.clopen_failure_found = true;
        }
        if (inj != ref) rep.disagreements.push_back({m, inj, ref});
      }
  return rep;
}

}  // namespace

SweepReport sweep_equivalence(const Subcategory& ctx, const FinSpace& a, int n_max, SweepMode mode,
                              const Budget& budget) {
  auto reps = member_reps([&](const FinSpace& s) { return ctx.ambient_member(s); }, n_max);
  return run_sweep(ctx.name(), reps, a, n_max, mode, budget);
}

SweepReport sweep_equivalence_filtered(const std::string& label,
                                       const std::function<bool(const FinSpace&)>& filter,
                                       const FinSpace& a, int n_max, SweepMode mode,
                                       const Budget& budget) {
  return run_sweep(label, member_reps(filter, n_max), a, n_max, mode, budget);
}

}  // namespace fintop
