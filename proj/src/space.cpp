#include "fintop/space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>

namespace fintop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_empty_or_full: return "MissingEmptyOrFull";
    case Errc::not_closed_under_union: return "NotClosedUnderUnion";
    case Errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case Errc::not_reflexive: return "NotReflexive";
    case Errc::not_transitive: return "NotTransitive";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::size_budget_exceeded: return "SizeBudgetExceeded";
    case Errc::not_parallel: return "NotParallel";
    case Errc::not_composable: return "NotComposable";
    case Errc::not_an_embedding: return "NotAnEmbedding";
    case Errc::not_in_subcategory: return "NotInSubcategory";
    case Errc::continuity_violation: return "ContinuityViolation";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_space: return "UnknownSpace";
    case Errc::unknown_map: return "UnknownMap";
    case Errc::unknown_context: return "UnknownContext";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

namespace {

std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if ((m >> i) & 1u) {
      if (!first) s += ' ';
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------- BitRel

bool BitRel::row_equal(int x, int y) const {
  return std::equal(row(x), row(x) + stride_, row(y));
}

bool BitRel::row_subset(int x, int y) const {
  const std::uint64_t *a = row(x), *b = row(y);
  for (int i = 0; i < stride_; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

int BitRel::row_count(int x) const {
  int c = 0;
  for (int i = 0; i < stride_; ++i) c += std::popcount(row(x)[i]);
  return c;
}

bool BitRel::is_reflexive() const {
  for (int x = 0; x < n_; ++x)
    if (!get(x, x)) return false;
  return true;
}

std::optional<std::array<int, 3>> BitRel::transitivity_defect() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!get(x, y)) continue;
      if (!row_subset(y, x)) {
        for (int z = 0; z < n_; ++z)
          if (get(y, z) && !get(x, z)) return std::array<int, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

void BitRel::transitive_close() {
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (get(i, k)) {
        std::uint64_t* ri = row(i);
        const std::uint64_t* rk = row(k);
        for (int w = 0; w < stride_; ++w) ri[w] |= rk[w];
      }
}

// ---------------------------------------------------------------- Preorder

Preorder::Preorder(BitRel rel) : rel_(std::move(rel)) {
  if (!rel_.is_reflexive()) {
    int bad = -1;
    for (int x = 0; x < rel_.size(); ++x)
      if (!rel_.get(x, x)) { bad = x; break; }
    fail(Errc::not_reflexive, "point " + std::to_string(bad) + " is not below itself");
  }
  if (auto d = rel_.transitivity_defect()) {
    fail(Errc::not_transitive, std::to_string((*d)[0]) + " <= " + std::to_string((*d)[1]) +
                                   " <= " + std::to_string((*d)[2]) + " but not " +
                                   std::to_string((*d)[0]) + " <= " + std::to_string((*d)[2]));
  }
}

Preorder Preorder::from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  BitRel r(n);
  for (int x = 0; x < n; ++x) r.set(x, x);
  for (auto [x, y] : leq_pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(Errc::invalid_argument, "preorder pair out of range");
    r.set(x, y);
  }
  return Preorder(std::move(r));
}

// ---------------------------------------------------------------- FinSpace

FinSpace FinSpace::from_opens(int n, std::vector<Mask> opens) {
  if (n < 0 || n > 64) fail(Errc::invalid_argument, "point count must be in 0..64");
  const Mask full = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
  for (Mask o : opens)
    if (o & ~full) fail(Errc::invalid_argument, "open set " + mask_to_string(o) + " mentions a point >= " + std::to_string(n));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  bool has_empty = std::binary_search(opens.begin(), opens.end(), Mask(0));
  bool has_full = std::binary_search(opens.begin(), opens.end(), full);
  if (!has_empty || !has_full)
    fail(Errc::missing_empty_or_full,
         std::string(!has_empty ? "the empty set" : "the full set") + " is not in the family");
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j]))
        fail(Errc::not_closed_under_union,
             mask_to_string(opens[i]) + " union " + mask_to_string(opens[j]) + " is missing");
      if (!std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j]))
        fail(Errc::not_closed_under_intersection,
             mask_to_string(opens[i]) + " intersect " + mask_to_string(opens[j]) + " is missing");
    }

  BitRel up(n);
  for (int x = 0; x < n; ++x) {
    Mask m = full;
    for (Mask o : opens)
      if ((o >> x) & 1u) m &= o;
    up.row(x)[0] = m;
  }
  return FinSpace(std::move(up));
}

std::vector<Mask> FinSpace::opens(std::size_t cap) const {
  const int n = points();
  if (n > 64) fail(Errc::size_budget_exceeded, "open family of a space with more than 64 points");
  // DFS over points in ascending order; a subset is open iff it is an up-set.
  std::vector<Mask> out;
  std::vector<Mask> ups(std::size_t(n), 0);
  for (int x = 0; x < n; ++x) ups[std::size_t(x)] = up_.row64(x);
  // including i forces up(i) in; excluding i forces down(i) out
  std::vector<Mask> downs(std::size_t(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((ups[std::size_t(y)] >> x) & 1u) downs[std::size_t(x)] |= Mask(1) << y;
  struct Walk {
    int n;
    const std::vector<Mask>*ups, *downs;
    std::size_t cap;
    std::vector<Mask>* out;
    void rec(int i, Mask chosen, Mask forced_in, Mask forced_out) {
      if (i == n) {
        if (out->size() >= cap) fail(Errc::size_budget_exceeded, "open family larger than cap");
        out->push_back(chosen);
        return;
      }
      Mask bit = Mask(1) << i;
      if (forced_in & bit) {
        rec(i + 1, chosen | bit, forced_in | (*ups)[std::size_t(i)], forced_out);
        return;
      }
      if (forced_out & bit) {
        rec(i + 1, chosen, forced_in, forced_out | (*downs)[std::size_t(i)]);
        return;
      }
      rec(i + 1, chosen, forced_in, forced_out | (*downs)[std::size_t(i)]);
      rec(i + 1, chosen | bit, forced_in | (*ups)[std::size_t(i)], forced_out);
    }
  };
  Walk w{n, &ups, &downs, cap, &out};
  w.rec(0, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> FinSpace::clopens(std::size_t cap) const {
  const int n = points();
  if (n > 64) fail(Errc::size_budget_exceeded, "clopen family of a space with more than 64 points");
  // clopens are exactly the unions of comparability components
  std::vector<int> comp(std::size_t(n), -1);
  std::vector<Mask> comps;
  for (int x = 0; x < n; ++x) {
    if (comp[std::size_t(x)] >= 0) continue;
    // BFS over the symmetrized relation
    Mask seen = Mask(1) << x;
    std::vector<int> queue{x};
    comp[std::size_t(x)] = int(comps.size());
    while (!queue.empty()) {
      int y = queue.back();
      queue.pop_back();
      for (int z = 0; z < n; ++z) {
        if ((seen >> z) & 1u) continue;
        if (leq(y, z) || leq(z, y)) {
          seen |= Mask(1) << z;
          comp[std::size_t(z)] = int(comps.size());
          queue.push_back(z);
        }
      }
    }
    comps.push_back(seen);
  }
  if (comps.size() > 20 || (std::size_t(1) << comps.size()) > cap)
    fail(Errc::size_budget_exceeded, "clopen family larger than cap");
  std::vector<Mask> out;
  for (Mask pick = 0; pick < (Mask(1) << comps.size()); ++pick) {
    Mask u = 0;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if ((pick >> c) & 1u) u |= comps[c];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Mask FinSpace::closure64(Mask s) const {
  const int n = points();
  if (n > 64) fail(Errc::size_budget_exceeded, "closure mask on a space with more than 64 points");
  // closed sets are down-sets: add everything below s
  Mask out = s;
  for (int x = 0; x < n; ++x)
    if (up_.row64(x) & s) out |= Mask(1) << x;
  return out;
}

Mask FinSpace::interior64(Mask s) const {
  const int n = points();
  if (n > 64) fail(Errc::size_budget_exceeded, "interior mask on a space with more than 64 points");
  Mask out = 0;
  for (int x = 0; x < n; ++x)
    if ((s >> x & 1u) && (up_.row64(x) & ~s) == 0) out |= Mask(1) << x;
  return out;
}

bool FinSpace::is_open64(Mask s) const {
  const int n = points();
  if (n > 64) fail(Errc::size_budget_exceeded, "open test on a space with more than 64 points");
  for (int x = 0; x < n; ++x)
    if ((s >> x & 1u) && (up_.row64(x) & ~s)) return false;
  return true;
}

bool FinSpace::is_t0() const {
  for (int x = 0; x < points(); ++x)
    for (int y = x + 1; y < points(); ++y)
      if (up_.row_equal(x, y)) return false;
  return true;
}

bool FinSpace::is_discrete() const {
  for (int x = 0; x < points(); ++x)
    if (up_.row_count(x) != 1) return false;
  return true;
}

bool FinSpace::is_indiscrete() const {
  for (int x = 0; x < points(); ++x)
    if (up_.row_count(x) != points()) return false;
  return true;
}

bool FinSpace::is_zero_dimensional() const {
  // definitional check: every open is a union of clopen sets
  auto os = opens();
  auto cl = clopens();
  for (Mask o : os) {
    Mask u = 0;
    for (Mask c : cl)
      if ((c & ~o) == 0) u |= c;
    if (u != o) return false;
  }
  return true;
}

SpaceClass FinSpace::classify() const {
  SpaceClass out;
  out.t0 = is_t0();
  out.discrete = is_discrete();
  out.indiscrete = is_indiscrete();
  out.zero_dimensional = is_zero_dimensional();
  return out;
}

// ---------------------------------------------------------------- CMap

CMap::CMap(FinSpace dom, FinSpace cod, std::vector<Pt> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), tab_(std::move(table)) {
  if (int(tab_.size()) != dom_.points())
    fail(Errc::invalid_argument, "map table must assign every point of the domain");
  for (Pt v : tab_)
    if (v < 0 || v >= cod_.points())
      fail(Errc::invalid_argument, "map value " + std::to_string(v) + " outside the codomain");
  // continuity == monotonicity for the specialization preorders
  const int n = dom_.points();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (dom_.leq(x, y) && !cod_.leq(tab_[std::size_t(x)], tab_[std::size_t(y)])) {
        std::string open = cod_.points() <= 64
                               ? mask_to_string(cod_.min_open64(tab_[std::size_t(x)]))
                               : std::string("the minimal open of ") + std::to_string(tab_[std::size_t(x)]);
        fail(Errc::continuity_violation,
             "preimage of open " + open + " is not open (points " + std::to_string(x) + " <= " +
                 std::to_string(y) + " map to incomparable values)");
      }
}

CMap CMap::identity(const FinSpace& x) {
  std::vector<Pt> t(std::size_t(x.points()), 0);
  std::iota(t.begin(), t.end(), 0);
  return CMap(x, x, std::move(t));
}

CMap CMap::constant(const FinSpace& dom, const FinSpace& cod, Pt value) {
  return CMap(dom, cod, std::vector<Pt>(std::size_t(dom.points()), value));
}

bool CMap::injective() const {
  std::vector<char> seen(std::size_t(cod_.points()), 0);
  for (Pt v : tab_) {
    if (seen[std::size_t(v)]) return false;
    seen[std::size_t(v)] = 1;
  }
  return true;
}

bool CMap::surjective() const {
  std::vector<char> seen(std::size_t(cod_.points()), 0);
  std::size_t c = 0;
  for (Pt v : tab_)
    if (!seen[std::size_t(v)]) {
      seen[std::size_t(v)] = 1;
      ++c;
    }
  return c == std::size_t(cod_.points());
}

CMap compose(const CMap& g, const CMap& f) {
  if (!(f.cod() == g.dom())) fail(Errc::not_composable, "codomain of the first differs from domain of the second");
  std::vector<Pt> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f.table()[i]);
  return CMap(f.dom(), g.cod(), std::move(t));
}

bool is_embedding(const CMap& f) {
  if (!f.injective()) return false;
  const int n = f.dom().points();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!f.dom().leq(x, y) && f.cod().leq(f(x), f(y))) return false;
  return true;
}

bool is_iso(const CMap& f) { return f.surjective() && is_embedding(f); }

std::pair<FinSpace, CMap> subspace(const FinSpace& y, const std::vector<Pt>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 0 || pts[i] >= y.points()) fail(Errc::invalid_argument, "subspace point out of range");
    if (i > 0 && pts[i] <= pts[i - 1]) fail(Errc::invalid_argument, "subspace points must be ascending and distinct");
  }
  const int k = int(pts.size());
  BitRel up(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (y.leq(pts[std::size_t(i)], pts[std::size_t(j)])) up.set(i, j);
  FinSpace s = FinSpace::from_up_rows(std::move(up));
  CMap incl(s, y, std::vector<Pt>(pts.begin(), pts.end()));
  return {std::move(s), std::move(incl)};
}

std::pair<FinSpace, CMap> subspace64(const FinSpace& y, Mask pts) {
  std::vector<Pt> v;
  for (int i = 0; i < y.points() && i < 64; ++i)
    if ((pts >> i) & 1u) v.push_back(i);
  return subspace(y, v);
}

std::vector<Pt> image_points(const CMap& f) {
  std::vector<Pt> v(f.table());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Mask image_mask64(const CMap& f) {
  Mask m = 0;
  for (Pt v : f.table()) m |= Mask(1) << v;
  return m;
}

// ------------------------------------------------------- canonical form

namespace {

struct PointKey {
  int up, down, both;
  bool operator==(const PointKey&) const = default;
  bool operator<(const PointKey& o) const {
    return std::tie(up, down, both) < std::tie(o.up, o.down, o.both);
  }
};

std::vector<PointKey> point_keys(const FinSpace& x) {
  const int n = x.points();
  std::vector<PointKey> keys(std::size_t(n), PointKey{});
  for (int p = 0; p < n; ++p) {
    int u = 0, d = 0, b = 0;
    for (int q = 0; q < n; ++q) {
      bool pq = x.leq(p, q), qp = x.leq(q, p);
      u += pq;
      d += qp;
      b += pq && qp;
    }
    keys[std::size_t(p)] = {u, d, b};
  }
  return keys;
}

std::vector<std::uint64_t> encode(const FinSpace& x, const std::vector<Pt>& pos_to_point) {
  const int n = x.points();
  std::vector<std::uint64_t> bits((std::size_t(n) * n + 63) / 64 + (n == 0 ? 1 : 0), 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++k)
      if (x.leq(pos_to_point[std::size_t(i)], pos_to_point[std::size_t(j)]))
        bits[k >> 6] |= std::uint64_t(1) << (k & 63);
  return bits;
}

}  // namespace

std::vector<Pt> canonical_permutation(const FinSpace& x) {
  const int n = x.points();
  if (n > 12) fail(Errc::bound_exceeded, "canonical form limited to 12 points");
  if (n == 0) return {};
  auto keys = point_keys(x);
  // target key sequence: sorted ascending; position i may only take a point
  // whose key equals target[i]
  std::vector<PointKey> target(keys);
  std::sort(target.begin(), target.end());

  std::vector<Pt> best;          // pos -> point
  std::vector<std::uint64_t> best_bits;
  std::vector<Pt> cur(std::size_t(n), -1);
  std::vector<char> used(std::size_t(n), 0);

  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      auto bits = encode(x, cur);
      if (best.empty() || bits < best_bits) {
        best = cur;
        best_bits = std::move(bits);
      }
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (used[std::size_t(p)] || !(keys[std::size_t(p)] == target[std::size_t(i)])) continue;
      used[std::size_t(p)] = 1;
      cur[std::size_t(i)] = p;
      rec(i + 1);
      used[std::size_t(p)] = 0;
    }
  };
  rec(0);

  std::vector<Pt> perm(std::size_t(n), 0);  // point -> new index
  for (int i = 0; i < n; ++i) perm[std::size_t(best[std::size_t(i)])] = i;
  return perm;
}

FinSpace relabel(const FinSpace& x, const std::vector<Pt>& perm) {
  const int n = x.points();
  BitRel up(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (x.leq(p, q)) up.set(perm[std::size_t(p)], perm[std::size_t(q)]);
  return FinSpace::from_up_rows(std::move(up));
}

FinSpace canonical_form(const FinSpace& x) { return relabel(x, canonical_permutation(x)); }

// ------------------------------------------------------- enumeration

std::vector<FinSpace> enumerate_spaces(int n, bool up_to_iso, int bound) {
  if (n < 0) fail(Errc::invalid_argument, "negative point count");
  if (n > bound)
    fail(Errc::bound_exceeded,
         "enumeration of " + std::to_string(n) + "-point spaces exceeds bound " + std::to_string(bound));
  std::vector<FinSpace> out;
  if (n == 0) {
    out.push_back(empty_space());
    return out;
  }
  const Mask full = (Mask(1) << n) - 1;
  std::vector<Mask> rows(std::size_t(n), 0);
  // assign up-set rows in ascending point order; pairwise row constraints
  // enforce transitivity once all rows are fixed
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      BitRel up(n);
      for (int p = 0; p < n; ++p) up.row(p)[0] = rows[std::size_t(p)];
      out.push_back(FinSpace::from_up_rows(std::move(up)));
      return;
    }
    for (Mask r = 0; r <= full; ++r) {
      if (!((r >> x) & 1u)) continue;  // reflexive
      bool ok = true;
      for (int p = 0; p < x && ok; ++p) {
        Mask rp = rows[std::size_t(p)];
        if ((rp >> x) & 1u) ok = ok && (r & ~rp) == 0;       // p <= x forces up(x) subset up(p)
        if ((r >> p) & 1u) ok = ok && (rp & ~r) == 0;        // x <= p forces up(p) subset up(x)
      }
      if (!ok) continue;
      rows[std::size_t(x)] = r;
      rec(x + 1);
    }
  };
  rec(0);
  if (up_to_iso) {
    std::vector<FinSpace> reps;
    for (const FinSpace& s : out)
      if (canonical_form(s) == s) reps.push_back(s);
    return reps;
  }
  return out;
}

std::size_t brute_force_topology_count(int n, bool t0_only) {
  if (n < 0 || n > 4) fail(Errc::bound_exceeded, "brute-force topology count limited to 4 points");
  if (n == 0) return 1;
  const int subsets = 1 << n;
  const Mask full = Mask(subsets - 1);
  std::size_t count = 0;
  // each candidate family is a set of subsets, encoded as a bitmask over the
  // 2^n subsets of {0..n-1}
  const std::uint64_t families = std::uint64_t(1) << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (!((fam >> 0) & 1u)) continue;               // empty set present
    if (!((fam >> (subsets - 1)) & 1u)) continue;   // full set present
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a) {
      if (!((fam >> a) & 1u)) continue;
      for (int b = a + 1; b < subsets && ok; ++b) {
        if (!((fam >> b) & 1u)) continue;
        ok = ((fam >> (a | b)) & 1u) && ((fam >> (a & b)) & 1u);
      }
    }
    if (!ok) continue;
    if (t0_only) {
      // distinct points must have different minimal opens
      bool t0 = true;
      for (int x = 0; x < n && t0; ++x)
        for (int y = x + 1; y < n && t0; ++y) {
          Mask mx = full, my = full;
          for (int a = 0; a < subsets; ++a)
            if ((fam >> a) & 1u) {
              if ((a >> x) & 1) mx &= Mask(a);
              if ((a >> y) & 1) my &= Mask(a);
            }
          t0 = mx != my;
        }
      if (!t0) continue;
    }
    ++count;
  }
  return count;
}

// ------------------------------------------------------- named spaces

FinSpace empty_space() { return FinSpace::from_opens(0, {0}); }
FinSpace point_space() { return FinSpace::from_opens(1, {0, 1}); }
FinSpace sierpinski() { return FinSpace::from_opens(2, {0b00, 0b10, 0b11}); }

FinSpace discrete_space(int n) {
  if (n < 0) fail(Errc::invalid_argument, "negative space size");
  BitRel up(n);
  for (int x = 0; x < n; ++x) up.set(x, x);
  return FinSpace::from_up_rows(std::move(up));
}

FinSpace indiscrete_space(int n) {
  if (n < 0) fail(Errc::invalid_argument, "negative space size");
  BitRel up(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) up.set(x, y);
  return FinSpace::from_up_rows(std::move(up));
}

FinSpace space_a1() { return FinSpace::from_opens(3, {0b000, 0b001, 0b111}); }
FinSpace space_a2() { return FinSpace::from_opens(3, {0b000, 0b001, 0b110, 0b111}); }

}  // namespace fintop
