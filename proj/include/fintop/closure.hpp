#ifndef FINTOP_CLOSURE_HPP
#define FINTOP_CLOSURE_HPP

#include <string>
#include <vector>

#include "fintop/cat.hpp"
#include "fintop/hom.hpp"

namespace fintop {

// The (dense, closed) factorization of an embedding under a closure operator:
// original = closure . dense_part, with closure an embedding into the same
// codomain.
struct ClosureResult {
  CMap original;    // m : X -> Y
  CMap closure;     // c(m) : Xbar -> Y
  CMap dense_part;  // d(m) : X -> Xbar
  bool is_dense = false;   // c(m) is the whole of Y
  bool is_closed = false;  // c(m) is m itself, as a subobject
};

enum class ClosureOp { regular, orthogonal };

// Equalizer of the ctx-reflected cokernel pair of m.
ClosureResult regular_closure(const Subcategory& ctx, const CMap& m, const Budget& budget = {});

// Pullback of the ambient-reflected pushout of m along the reflection of its
// domain. Defined here for any embedding; membership of m in the
// pushout-stable class is certified separately (see compare_closures).
ClosureResult orthogonal_closure(const Subcategory& ctx, const CMap& m, const Budget& budget = {});

ClosureResult apply_closure(const Subcategory& ctx, ClosureOp op, const CMap& m,
                            const Budget& budget = {});

struct AxiomReport {
  std::string context;
  std::string op;
  int n_max = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;  // human-readable witnesses
  bool clean() const { return violations.empty(); }
};

// Extensiveness, monotonicity, and continuity (inverse images via pullback)
// over all embeddings and maps among ambient members of <= n_max points.
AxiomReport operator_axioms(const Subcategory& ctx, ClosureOp op, int n_max,
                            const Budget& budget = {});

// c(c(m)) iso c(m), and the dense part of each embedding is itself dense.
AxiomReport hereditary_idempotent(const Subcategory& ctx, ClosureOp op, int n_max,
                                  const Budget& budget = {});

// Every embedding of b into an ambient member of <= bound points is
// orthogonally closed.
bool absolutely_closed(const Subcategory& ctx, const FinSpace& b, int bound,
                       const Budget& budget = {});

struct ClosureComparison {
  ClosureResult reg;
  ClosureResult ort;
  bool agree = false;        // the two closures are isomorphic subobjects
  bool ort_leq_reg = false;  // orthogonal closure factors through the regular one
  StabilityVerdict stability;
};

// Both closures of m, plus the stability certificate at `stability_bound`.
ClosureComparison compare_closures(const Subcategory& ctx, const CMap& m, int stability_bound = 3,
                                   const Budget& budget = {});

}  // namespace fintop

#endif
