#include "fintop/cat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fintop/hom.hpp"

namespace fintop {

namespace {

void check_points_budget(long long n, const Budget& budget, const char* what) {
  if (n > budget.max_points)
    fail(Errc::size_budget_exceeded,
         std::string(what) + " would have " + std::to_string(n) + " points (budget " +
             std::to_string(budget.max_points) + ")");
}

}  // namespace

std::tuple<FinSpace, CMap, CMap> product(const FinSpace& x, const FinSpace& y,
                                         const Budget& budget) {
  const long long nx = x.points(), ny = y.points();
  check_points_budget(nx * ny, budget, "product");
  const int n = int(nx * ny);  // pair (p,q) at index p*ny + q
  BitRel up(n);
  for (int p = 0; p < nx; ++p)
    for (int q = 0; q < ny; ++q)
      for (int p2 = 0; p2 < nx; ++p2)
        for (int q2 = 0; q2 < ny; ++q2)
          if (x.leq(p, p2) && y.leq(q, q2)) up.set(int(p * ny + q), int(p2 * ny + q2));
  FinSpace prod = FinSpace::from_up_rows(std::move(up));
  std::vector<Pt> t1(std::size_t(n), 0), t2(std::size_t(n), 0);
  for (int p = 0; p < nx; ++p)
    for (int q = 0; q < ny; ++q) {
      t1[std::size_t(p * ny + q)] = p;
      t2[std::size_t(p * ny + q)] = q;
    }
  CMap pr1(prod, x, std::move(t1));
  CMap pr2(prod, y, std::move(t2));
  return {std::move(prod), std::move(pr1), std::move(pr2)};
}

std::pair<FinSpace, std::vector<CMap>> power(const FinSpace& a, int k, const Budget& budget) {
  if (k < 0) fail(Errc::invalid_argument, "negative power");
  const long long base = a.points();
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= base;
    check_points_budget(n, budget, "power");
    if (n == 0) break;
  }
  const int np = int(n);
  // digit i of a point index is its i-th coordinate, least significant first
  std::vector<std::vector<Pt>> digits(std::size_t(np), std::vector<Pt>(std::size_t(k), 0));
  for (int p = 0; p < np; ++p) {
    long long v = p;
    for (int i = 0; i < k; ++i) {
      digits[std::size_t(p)][std::size_t(i)] = Pt(v % base);
      v /= base;
    }
  }
  BitRel up(np);
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q) {
      bool le = true;
      for (int i = 0; i < k && le; ++i)
        le = a.leq(digits[std::size_t(p)][std::size_t(i)], digits[std::size_t(q)][std::size_t(i)]);
      if (le) up.set(p, q);
    }
  FinSpace pw = FinSpace::from_up_rows(std::move(up));
  std::vector<CMap> projections;
  projections.reserve(std::size_t(k));
  for (int i = 0; i < k; ++i) {
    std::vector<Pt> t(std::size_t(np), 0);
    for (int p = 0; p < np; ++p) t[std::size_t(p)] = digits[std::size_t(p)][std::size_t(i)];
    projections.emplace_back(pw, a, std::move(t));
  }
  return {std::move(pw), std::move(projections)};
}

std::tuple<FinSpace, CMap, CMap> coproduct(const FinSpace& x, const FinSpace& y) {
  const int nx = x.points(), ny = y.points();
  BitRel up(nx + ny);
  for (int p = 0; p < nx; ++p)
    for (int q = 0; q < nx; ++q)
      if (x.leq(p, q)) up.set(p, q);
  for (int p = 0; p < ny; ++p)
    for (int q = 0; q < ny; ++q)
      if (y.leq(p, q)) up.set(nx + p, nx + q);
  FinSpace sum = FinSpace::from_up_rows(std::move(up));
  std::vector<Pt> t1(std::size_t(nx), 0), t2(std::size_t(ny), 0);
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), nx);
  CMap in1(x, sum, std::move(t1));
  CMap in2(y, sum, std::move(t2));
  return {std::move(sum), std::move(in1), std::move(in2)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(std::size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[std::size_t(v)] != v) {
      parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
      v = parent[std::size_t(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least id as representative
    parent[std::size_t(b)] = a;
  }
};

// Quotient of y by the equivalence generated by `pairs`, with the final
// topology; classes are labeled by least original point and ordered by it.
CMap quotient_map(const FinSpace& y, const std::vector<std::pair<int, int>>& pairs) {
  const int n = y.points();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  std::map<int, int> rep_to_class;
  for (int p = 0; p < n; ++p) rep_to_class.emplace(uf.find(p), 0);
  int next = 0;
  for (auto& [rep, cls] : rep_to_class) cls = next++;
  std::vector<Pt> tab(std::size_t(n), 0);
  for (int p = 0; p < n; ++p) tab[std::size_t(p)] = rep_to_class[uf.find(p)];
  const int k = next;
  // final preorder: reflexive-transitive closure of the pushed-down relation
  BitRel reach(k);
  for (int c = 0; c < k; ++c) reach.set(c, c);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (y.leq(p, q)) reach.set(tab[std::size_t(p)], tab[std::size_t(q)]);
  reach.transitive_close();
  FinSpace quot = FinSpace::from_up_rows(std::move(reach));
  return CMap(y, quot, std::move(tab));
}

}  // namespace

CMap coequalizer(const CMap& f, const CMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    fail(Errc::not_parallel, "coequalizer needs a parallel pair");
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < f.dom().points(); ++p) pairs.emplace_back(f(p), g(p));
  return quotient_map(f.cod(), pairs);
}

CMap equalizer(const CMap& f, const CMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    fail(Errc::not_parallel, "equalizer needs a parallel pair");
  std::vector<Pt> pts;
  for (int p = 0; p < f.dom().points(); ++p)
    if (f(p) == g(p)) pts.push_back(p);
  return subspace(f.dom(), pts).second;
}

Span pullback(const CMap& f, const CMap& g, const Budget& budget) {
  if (!(f.cod() == g.cod())) fail(Errc::invalid_argument, "pullback needs a shared codomain");
  const int nx = f.dom().points(), nz = g.dom().points();
  long long matches = 0;
  for (int p = 0; p < nx; ++p)
    for (int q = 0; q < nz; ++q) matches += f(p) == g(q);
  check_points_budget(matches, budget, "pullback");
  std::vector<std::pair<Pt, Pt>> pts;
  pts.reserve(std::size_t(matches));
  for (int p = 0; p < nx; ++p)
    for (int q = 0; q < nz; ++q)
      if (f(p) == g(q)) pts.emplace_back(p, q);
  const int n = int(pts.size());
  BitRel up(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.dom().leq(pts[std::size_t(i)].first, pts[std::size_t(j)].first) &&
          g.dom().leq(pts[std::size_t(i)].second, pts[std::size_t(j)].second))
        up.set(i, j);
  FinSpace pb = FinSpace::from_up_rows(std::move(up));
  std::vector<Pt> t1(std::size_t(n), 0), t2(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) {
    t1[std::size_t(i)] = pts[std::size_t(i)].first;
    t2[std::size_t(i)] = pts[std::size_t(i)].second;
  }
  CMap p1(pb, f.dom(), std::move(t1));
  CMap p2(pb, g.dom(), std::move(t2));
  return Span{std::move(p1), std::move(p2)};
}

Cospan pushout(const CMap& f, const CMap& g, const Budget& budget) {
  if (!(f.dom() == g.dom())) fail(Errc::invalid_argument, "pushout needs a shared domain");
  auto [sum, in1, in2] = coproduct(f.cod(), g.cod());
  check_points_budget(sum.points(), budget, "pushout");
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < f.dom().points(); ++p) pairs.emplace_back(in1(f(p)), in2(g(p)));
  CMap q = quotient_map(sum, pairs);
  return Cospan{compose(q, in1), compose(q, in2)};
}

Cospan cokernel_pair(const CMap& m, const Budget& budget) { return pushout(m, m, budget); }

std::pair<CMap, CMap> factorize(const CMap& f) {
  std::vector<Pt> img = image_points(f);
  auto [sub, incl] = subspace(f.cod(), img);
  std::vector<Pt> e_tab(f.table().size());
  for (std::size_t i = 0; i < e_tab.size(); ++i) {
    auto it = std::lower_bound(img.begin(), img.end(), f.table()[i]);
    e_tab[i] = Pt(it - img.begin());
  }
  CMap e(f.dom(), sub, std::move(e_tab));
  return {std::move(e), std::move(incl)};
}

// ------------------------------------------------------------ reflections

Reflection t0_quotient(const FinSpace& x) {
  const int n = x.points();
  // identify points with identical minimal opens
  std::vector<int> cls(std::size_t(n), -1);
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < int(reps.size()); ++r)
      if (x.up().row_equal(p, reps[std::size_t(r)])) {
        cls[std::size_t(p)] = r;
        break;
      }
    if (cls[std::size_t(p)] < 0) {
      cls[std::size_t(p)] = int(reps.size());
      reps.push_back(p);
    }
  }
  const int k = int(reps.size());
  BitRel up(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (x.leq(reps[std::size_t(i)], reps[std::size_t(j)])) up.set(i, j);
  FinSpace q = FinSpace::from_up_rows(std::move(up));
  std::vector<Pt> tab(cls.begin(), cls.end());
  CMap r(x, q, std::move(tab));
  return Reflection{std::move(q), std::move(r)};
}

Reflection indiscrete_reflection(const FinSpace& x) {
  const int n = x.points();
  FinSpace ind = indiscrete_space(n);
  std::vector<Pt> tab(std::size_t(n), 0);
  std::iota(tab.begin(), tab.end(), 0);
  CMap r(x, ind, std::move(tab));
  return Reflection{std::move(ind), std::move(r)};
}

Reflection zero_dim_reflection(const FinSpace& x) {
  // coarsen to the equivalence closure of the specialization order; the opens
  // of the result are the clopens of x
  const int n = x.points();
  BitRel sym(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (x.leq(p, q) || x.leq(q, p)) sym.set(p, q);
  sym.transitive_close();
  FinSpace rx = FinSpace::from_up_rows(std::move(sym));
  std::vector<Pt> tab(std::size_t(n), 0);
  std::iota(tab.begin(), tab.end(), 0);
  CMap r(x, rx, std::move(tab));
  return Reflection{std::move(rx), std::move(r)};
}

namespace {

Reflection identity_reflection(const FinSpace& x) { return Reflection{x, CMap::identity(x)}; }

Reflection hull_reflection(const FinSpace& a, const FinSpace& x, const Budget& budget) {
  // image of the canonical map x -> a^Hom(x,a), with the trace topology.
  // In the image, tuple(p) <= tuple(q) iff no map sends p, q to incomparable
  // values, and tuples coincide iff no map separates the points at all.
  (void)budget;
  const int n = x.points();
  const int m = a.points();
  if (m == 2) {
    // maps into a two-point space are determined by one open (or clopen, or
    // arbitrary) subset, and the image construction collapses exactly
    const bool a01 = a.leq(0, 1), a10 = a.leq(1, 0);
    if (a01 && a10) return indiscrete_reflection(x);
    if (!a01 && !a10) return zero_dim_reflection(x);
    return t0_quotient(x);
  }
  // generic dualizer: decide each tuple comparison by a pinned existence search
  BitRel img_le(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool le = true;
      for (int v = 0; v < m && le; ++v)
        for (int w = 0; w < m && le; ++w) {
          if (a.leq(v, w)) continue;
          if (find_hom_with_pins(x, a, {{p, v}, {q, w}})) le = false;
        }
      if (le) img_le.set(p, q);
    }
  std::vector<int> cls(std::size_t(n), -1);
  std::vector<int> reps;
  auto same_tuple = [&](int p, int q) {
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        if (v == w) continue;
        if (find_hom_with_pins(x, a, {{p, v}, {q, w}})) return false;
      }
    return true;
  };
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < int(reps.size()); ++r)
      if (same_tuple(p, reps[std::size_t(r)])) {
        cls[std::size_t(p)] = r;
        break;
      }
    if (cls[std::size_t(p)] < 0) {
      cls[std::size_t(p)] = int(reps.size());
      reps.push_back(p);
    }
  }
  const int k = int(reps.size());
  BitRel up(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (img_le.get(reps[std::size_t(i)], reps[std::size_t(j)])) up.set(i, j);
  FinSpace rx = FinSpace::from_up_rows(std::move(up));
  std::vector<Pt> tab(cls.begin(), cls.end());
  CMap r(x, rx, std::move(tab));
  return Reflection{std::move(rx), std::move(r)};
}

}  // namespace

Subcategory Subcategory::top() {
  auto all = [](const FinSpace&) { return true; };
  auto refl = [](const FinSpace& x, const Budget&) { return identity_reflection(x); };
  return Subcategory("top", all, refl, all, refl, true);
}

Subcategory Subcategory::top0() {
  auto mem = [](const FinSpace& x) { return x.is_t0(); };
  auto refl = [](const FinSpace& x, const Budget&) { return t0_quotient(x); };
  return Subcategory("top0", mem, refl, mem, refl, true);
}

Subcategory Subcategory::indiscrete() {
  auto mem = [](const FinSpace& x) { return x.is_indiscrete(); };
  auto refl = [](const FinSpace& x, const Budget&) { return indiscrete_reflection(x); };
  return Subcategory("ind", mem, refl, mem, refl, true);
}

Subcategory Subcategory::sober_finite() {
  auto mem = [](const FinSpace& x) { return x.is_t0(); };
  auto refl = [](const FinSpace& x, const Budget&) { return t0_quotient(x); };
  return Subcategory("sob", mem, refl, mem, refl, true);
}

Subcategory Subcategory::zero_dimensional() {
  auto mem = [](const FinSpace& x) { return x.is_zero_dimensional(); };
  auto refl = [](const FinSpace& x, const Budget&) { return zero_dim_reflection(x); };
  return Subcategory("zerodim", mem, refl, mem, refl, true);
}

Subcategory Subcategory::hull_of(const FinSpace& a) {
  auto refl = [a](const FinSpace& x, const Budget& budget) { return hull_reflection(a, x, budget); };
  auto mem = [refl](const FinSpace& x) { return is_iso(refl(x, Budget{}).arrow); };
  return Subcategory("hull", mem, refl, mem, refl, true);
}

Subcategory builtin_context(const std::string& name) {
  if (name == "top") return Subcategory::top();
  if (name == "top0") return Subcategory::top0();
  if (name == "ind") return Subcategory::indiscrete();
  if (name == "sob") return Subcategory::sober_finite();
  if (name == "zerodim") return Subcategory::zero_dimensional();
  fail(Errc::unknown_context, "no builtin context named '" + name + "'");
}

// ------------------------------------------------------------ predicates

bool epi_in(const Subcategory& ctx, const CMap& f, const Budget& budget) {
  if (!ctx.member(f.dom()) || !ctx.member(f.cod()))
    fail(Errc::not_in_subcategory, "domain or codomain outside " + ctx.name());
  Cospan cp = pushout(f, f, budget);
  Reflection r = ctx.reflect(cp.left.cod(), budget);
  return compose(r.arrow, cp.left).table() == compose(r.arrow, cp.right).table();
}

bool regular_mono_in(const Subcategory& ctx, const CMap& m, const Budget& budget) {
  if (!ctx.member(m.dom()) || !ctx.member(m.cod()))
    fail(Errc::not_in_subcategory, "domain or codomain outside " + ctx.name());
  Cospan cp = cokernel_pair(m, budget);
  Reflection r = ctx.reflect(cp.left.cod(), budget);
  CMap eq = equalizer(compose(r.arrow, cp.left), compose(r.arrow, cp.right));
  return is_embedding(m) && image_points(m) == image_points(eq);
}

// ------------------------------------------------------------ oracles

namespace {

std::vector<Pt> compose_tables(const std::vector<Pt>& outer, const std::vector<Pt>& inner) {
  std::vector<Pt> t(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) t[i] = outer[std::size_t(inner[i])];
  return t;
}

}  // namespace

bool verify_couniversal(const Cospan& c, const Span& over, int bound, const Budget& budget) {
  if (!(c.left.dom() == over.left.cod()) || !(c.right.dom() == over.right.cod()) ||
      !(c.left.cod() == c.right.cod()))
    fail(Errc::invalid_argument, "cospan does not sit over the span");
  if (compose(c.left, over.left).table() != compose(c.right, over.right).table()) return false;
  const FinSpace& w = c.left.cod();
  for (const FinSpace& v : member_reps([](const FinSpace&) { return true; }, bound)) {
    auto homs1 = hom_set(over.left.cod(), v, budget);
    auto homs2 = hom_set(over.right.cod(), v, budget);
    auto homs_w = hom_set(w, v, budget);
    for (const CMap& d1 : homs1)
      for (const CMap& d2 : homs2) {
        if (compose_tables(d1.table(), over.left.table()) !=
            compose_tables(d2.table(), over.right.table()))
          continue;
        int count = 0;
        for (const CMap& h : homs_w) {
          if (compose_tables(h.table(), c.left.table()) == d1.table() &&
              compose_tables(h.table(), c.right.table()) == d2.table())
            ++count;
          if (count > 1) break;
        }
        if (count != 1) return false;
      }
  }
  return true;
}

bool verify_universal(const Span& s, const Cospan& over, int bound, const Budget& budget) {
  if (!(s.left.dom() == s.right.dom()) || !(s.left.cod() == over.left.dom()) ||
      !(s.right.cod() == over.right.dom()))
    fail(Errc::invalid_argument, "span does not sit under the cospan");
  if (compose(over.left, s.left).table() != compose(over.right, s.right).table()) return false;
  const FinSpace& p = s.left.dom();
  for (const FinSpace& v : member_reps([](const FinSpace&) { return true; }, bound)) {
    auto homs1 = hom_set(v, over.left.dom(), budget);
    auto homs2 = hom_set(v, over.right.dom(), budget);
    auto homs_p = hom_set(v, p, budget);
    for (const CMap& d1 : homs1)
      for (const CMap& d2 : homs2) {
        if (compose_tables(over.left.table(), d1.table()) !=
            compose_tables(over.right.table(), d2.table()))
          continue;
        int count = 0;
        for (const CMap& h : homs_p) {
          if (compose_tables(s.left.table(), h.table()) == d1.table() &&
              compose_tables(s.right.table(), h.table()) == d2.table())
            ++count;
          if (count > 1) break;
        }
        if (count != 1) return false;
      }
  }
  return true;
}

std::vector<FinSpace> member_reps(const std::function<bool(const FinSpace&)>& pred, int n_max) {
  std::vector<FinSpace> out;
  for (int n = 0; n <= n_max; ++n)
    for (const FinSpace& s : enumerate_spaces(n, /*up_to_iso=*/true))
      if (pred(s)) out.push_back(s);
  return out;
}

bool subobject_leq(const CMap& m, const CMap& n) {
  if (!(m.cod() == n.cod())) fail(Errc::invalid_argument, "subobjects of different spaces");
  if (!is_embedding(m) || !is_embedding(n))
    fail(Errc::not_an_embedding, "subobject comparison is defined for embeddings");
  std::vector<Pt> im = image_points(m), in = image_points(n);
  return std::includes(in.begin(), in.end(), im.begin(), im.end());
}

bool subobject_iso(const CMap& m, const CMap& n) {
  if (!(m.cod() == n.cod())) fail(Errc::invalid_argument, "subobjects of different spaces");
  if (!is_embedding(m) || !is_embedding(n))
    fail(Errc::not_an_embedding, "subobject comparison is defined for embeddings");
  return image_points(m) == image_points(n);
}

}  // namespace fintop
