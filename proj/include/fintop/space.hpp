#ifndef FINTOP_SPACE_HPP
#define FINTOP_SPACE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

using Pt = int;
using Mask = std::uint64_t;  // subset of a space with at most 64 points, bit i = point i

// Construction limits. Spaces larger than max_points are refused rather than
// attempted; open families larger than max_opens are never materialized;
// hom enumerations stop after max_maps results.
struct Budget {
  int max_points = 4096;
  std::size_t max_opens = std::size_t(1) << 20;
  std::size_t max_maps = std::size_t(1) << 24;
};

// n x n bit matrix, row-major, `stride` 64-bit words per row.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int n)
      : n_(n), stride_(n <= 0 ? 1 : (n + 63) / 64), w_(std::size_t(n_) * stride_, 0) {}

  int size() const { return n_; }
  int stride() const { return stride_; }
  bool get(int x, int y) const { return (row(x)[y >> 6] >> (y & 63)) & 1u; }
  void set(int x, int y) { row(x)[y >> 6] |= std::uint64_t(1) << (y & 63); }
  void clear(int x, int y) { row(x)[y >> 6] &= ~(std::uint64_t(1) << (y & 63)); }
  const std::uint64_t* row(int x) const { return w_.data() + std::size_t(x) * stride_; }
  std::uint64_t* row(int x) { return w_.data() + std::size_t(x) * stride_; }
  Mask row64(int x) const { return row(x)[0]; }  // meaningful only for n_ <= 64

  bool row_equal(int x, int y) const;
  bool row_subset(int x, int y) const;  // row(x) subseteq row(y)
  int row_count(int x) const;

  bool is_reflexive() const;
  // returns a triple (x,y,z) with x<=y, y<=z but not x<=z, if any
  std::optional<std::array<int, 3>> transitivity_defect() const;
  void transitive_close();

  bool operator==(const BitRel&) const = default;

 private:
  int n_ = 0;
  int stride_ = 1;
  std::vector<std::uint64_t> w_;
};

// x <= y means every open set containing x also contains y; opens are up-sets.
class Preorder {
 public:
  Preorder() : rel_(0) {}
  explicit Preorder(BitRel rel);  // validates reflexivity and transitivity
  static Preorder from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  int points() const { return rel_.size(); }
  bool leq(Pt x, Pt y) const { return rel_.get(x, y); }
  const BitRel& rel() const { return rel_; }

  bool operator==(const Preorder&) const = default;

 private:
  BitRel rel_;
};

struct SpaceClass {
  bool t0 = false;
  bool discrete = false;
  bool indiscrete = false;
  bool zero_dimensional = false;
};

// A finite topological space. Stored as the specialization preorder (row x of
// `up` is the minimal open neighbourhood of x); the open-set family is the
// family of up-sets and is materialized on demand for spaces of <= 64 points.
class FinSpace {
 public:
  FinSpace() : up_(0) {}

  // mk_space: validates the family (empty and full present, closed under
  // pairwise union and intersection). Points 0..n-1, n <= 64.
  static FinSpace from_opens(int n, std::vector<Mask> opens);
  static FinSpace from_preorder(const Preorder& p) { return FinSpace(p.rel()); }
  // trusted ctor for construction code; rows must be reflexive and transitive
  static FinSpace from_up_rows(BitRel up) { return FinSpace(std::move(up)); }

  int points() const { return up_.size(); }
  bool leq(Pt x, Pt y) const { return up_.get(x, y); }
  Mask min_open64(Pt x) const { return up_.row64(x); }  // requires points() <= 64
  const BitRel& up() const { return up_; }

  Preorder specialization() const { return Preorder(up_); }

  // All open sets in ascending numeric mask order. Requires points() <= 64;
  // throws size_budget_exceeded past `cap`.
  std::vector<Mask> opens(std::size_t cap = std::size_t(1) << 20) const;
  std::vector<Mask> clopens(std::size_t cap = std::size_t(1) << 20) const;
  Mask closure64(Mask s) const;   // smallest closed superset (points() <= 64)
  Mask interior64(Mask s) const;  // largest open subset (points() <= 64)
  bool is_open64(Mask s) const;

  SpaceClass classify() const;
  bool is_t0() const;
  bool is_discrete() const;
  bool is_indiscrete() const;
  bool is_zero_dimensional() const;

  bool operator==(const FinSpace&) const = default;

 private:
  explicit FinSpace(BitRel up) : up_(std::move(up)) {}
  BitRel up_;
};

// A continuous map between finite spaces, validated at construction.
class CMap {
 public:
  CMap() = default;
  CMap(FinSpace dom, FinSpace cod, std::vector<Pt> table);
  static CMap identity(const FinSpace& x);
  static CMap constant(const FinSpace& dom, const FinSpace& cod, Pt value);

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  const std::vector<Pt>& table() const { return tab_; }
  Pt operator()(Pt x) const { return tab_[std::size_t(x)]; }

  bool injective() const;
  bool surjective() const;

  bool operator==(const CMap&) const = default;

 private:
  FinSpace dom_, cod_;
  std::vector<Pt> tab_;
};

CMap compose(const CMap& g, const CMap& f);  // g after f

// true iff f is injective and reflects the specialization order
// (equivalently: every open of dom is the preimage of an open of cod).
bool is_embedding(const CMap& f);
bool is_iso(const CMap& f);

// Trace topology on a list of points (ascending, distinct) plus the inclusion.
std::pair<FinSpace, CMap> subspace(const FinSpace& y, const std::vector<Pt>& pts);
std::pair<FinSpace, CMap> subspace64(const FinSpace& y, Mask pts);

// Sorted list of points in the image of f.
std::vector<Pt> image_points(const CMap& f);
Mask image_mask64(const CMap& f);

// Deterministic minimum representative of the homeomorphism class.
// Backtracks over point relabelings with degree-class pruning. n <= 12.
FinSpace canonical_form(const FinSpace& x);
std::vector<Pt> canonical_permutation(const FinSpace& x);  // new index of each point
FinSpace relabel(const FinSpace& x, const std::vector<Pt>& perm);

// All labeled topologies on n points in deterministic (lexicographic) order,
// optionally filtered to canonical representatives. n <= bound (default 5).
std::vector<FinSpace> enumerate_spaces(int n, bool up_to_iso, int bound = 5);

// Independent check: walks every family of subsets of {0..n-1} and counts the
// valid topologies. Exponential in 2^n; n <= 4.
std::size_t brute_force_topology_count(int n, bool t0_only = false);

// Named small spaces used throughout the test suites.
FinSpace empty_space();
FinSpace point_space();
FinSpace sierpinski();             // 2 points, open point 1
FinSpace discrete_space(int n);
FinSpace indiscrete_space(int n);
FinSpace space_a1();               // 3 points, only nontrivial open {0}
FinSpace space_a2();               // 3 points, nontrivial opens {0} and {1,2}

}  // namespace fintop

#endif
