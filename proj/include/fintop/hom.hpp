#ifndef FINTOP_HOM_HPP
#define FINTOP_HOM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fintop/cat.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Canonical linear extension of the specialization order: repeatedly remove
// the smallest-index point that is minimal among the remainder.
std::vector<Pt> linear_extension(const FinSpace& x);

// Streams every continuous map x -> a as a point table, depth-first along the
// canonical linear extension with codomain values tried in ascending order.
// Deterministic. Returns false iff the visitor aborted. Throws
// size_budget_exceeded after budget.max_maps results.
bool for_each_hom(const FinSpace& x, const FinSpace& a,
                  const std::function<bool(const std::vector<Pt>&)>& visit,
                  const Budget& budget = {});

// Fast path for 2-point codomains and domains of <= 64 points: streams the
// masks f^{-1}(1). Same order and budget semantics as for_each_hom.
bool for_each_two_valued_hom(const FinSpace& x, const FinSpace& a,
                             const std::function<bool(Mask)>& visit, const Budget& budget = {});

std::size_t hom_count(const FinSpace& x, const FinSpace& a, const Budget& budget = {});

// First continuous map x -> a agreeing with the pinned values, if one exists.
// Depth-first with forward checking; aborts with size_budget_exceeded once
// node_cap search nodes are spent.
std::optional<std::vector<Pt>> find_hom_with_pins(const FinSpace& x, const FinSpace& a,
                                                  const std::vector<std::pair<Pt, Pt>>& pins,
                                                  std::uint64_t node_cap = 1u << 24);

// All continuous maps x -> a, sorted lexicographically by table.
std::vector<CMap> hom_set(const FinSpace& x, const FinSpace& a, const Budget& budget = {});

// Hom(f, A) surjective: every map dom(f) -> A extends along f.
bool injective_along(const FinSpace& a, const CMap& f, const Budget& budget = {});

// Hom(f, A) bijective.
bool orthogonal_along(const FinSpace& a, const CMap& f, const Budget& budget = {});

// Every clopen of dom(m) is the m-preimage of a clopen of cod(m).
// m must be an embedding.
bool clopen_lifting(const CMap& m);

struct StabilityVerdict {
  enum class Status { stable_up_to_bound, counterexample };
  Status status = Status::stable_up_to_bound;
  int bound = 0;
  struct Witness {
    CMap attaching;    // f : dom(m) -> Z
    CMap pushout_leg;  // reflected pushout of m along f, failing is_embedding
  };
  std::optional<Witness> witness;
  bool stable() const { return status == Status::stable_up_to_bound; }
};

// Pushes m out along every map into a ctx-ambient member of <= bound points
// (isomorphism representatives of the target); the verdict carries the first
// failing witness, or stability up to the stated bound.
StabilityVerdict pushout_stability(const Subcategory& ctx, const CMap& m, int bound,
                                   const Budget& budget = {});

enum class SweepMode { inj_vs_embedding, inj_vs_clopen_lifting };

struct SweepDisagreement {
  CMap m;
  bool injective = false;  // injective_along(A, m)
  bool reference = false;  // the structural predicate being compared
};

struct SweepReport {
  std::string context;
  SweepMode mode = SweepMode::inj_vs_embedding;
  int n_max = 0;
  std::size_t spaces = 0;
  std::size_t maps = 0;
  std::vector<SweepDisagreement> disagreements;
  // for the clopen mode: whether some embedding failed clopen_lifting
  std::optional<bool> clopen_failure_found;
  bool clean() const { return disagreements.empty(); }
};

// Iterates all ambient-member spaces X, Y up to n_max points (isomorphism
// representatives) and every continuous map m : X -> Y, comparing
// injective_along(A, m) with the mode's structural predicate.
SweepReport sweep_equivalence(const Subcategory& ctx, const FinSpace& a, int n_max,
                              SweepMode mode, const Budget& budget = {});
// Same sweep over an arbitrary space filter (no reflector needed).
SweepReport sweep_equivalence_filtered(const std::string& label,
                                       const std::function<bool(const FinSpace&)>& filter,
                                       const FinSpace& a, int n_max, SweepMode mode,
                                       const Budget& budget = {});

}  // namespace fintop

#endif
