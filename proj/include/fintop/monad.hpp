#ifndef FINTOP_MONAD_HPP
#define FINTOP_MONAD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fintop/cat.hpp"
#include "fintop/hom.hpp"

namespace fintop {

// The dualization monad T(n) = Hom(A^n, A) at a fixed finite carrier size.
// Elements of T(n) are indexed by the deterministic hom enumeration order;
// the multiplication table is indexed the same way over T(T(n)).
struct MonadInstance {
  FinSpace base;                    // A
  int carrier = 0;                  // n
  FinSpace domain_power;            // A^n
  std::vector<CMap> t_elements;     // T(n)
  std::vector<int> unit;            // eta_n : n -> index into t_elements
  FinSpace double_power;            // A^{T(n)}
  std::vector<Pt> power_counit;     // canonical A^n -> A^{T(n)}, pointwise
  std::vector<std::uint32_t> mult;  // mu_n : T(T(n)) enumeration order -> T(n) index
};

MonadInstance monad_at(const FinSpace& a, int n, const Budget& budget = {});

struct LawRecord {
  std::string law;
  std::string method;
  std::size_t checked = 0;
  std::vector<std::string> violations = {};
  bool skipped = false;
};

struct MonadReport {
  std::string subject;
  std::vector<LawRecord> laws;
  bool clean() const {
    for (const auto& l : laws)
      if (!l.violations.empty()) return false;
    return true;
  }
};

// Unit laws pointwise over T(n); associativity via the defining equation of
// the multiplication over all of T(T(n)) (equivalent to the pointwise law on
// T^3 because projections separate points of a power), plus the raw pointwise
// T^3 sweep whenever A^{T(T(n))} stays within the two-valued fast path.
MonadReport verify_monad(const MonadInstance& m, const Budget& budget = {});

// eps_B : B -> A^Hom(B,A), the unique map with pi_g . eps = g for every g.
CMap counit(const FinSpace& a, const FinSpace& b, const Budget& budget = {});

// The value grid of the counit without constructing the power space:
// coords[b][g] = homs[g](b).
struct CounitTable {
  std::vector<CMap> homs;
  std::vector<std::vector<Pt>> coords;
};
CounitTable counit_table(const FinSpace& a, const FinSpace& b, const Budget& budget = {});

// Eilenberg-Moore algebra on Hom(B,A) with structure map "compose with the
// counit". The structure table is materialized when T(carrier) is enumerable
// within budget; otherwise the algebra is kept implicit and verified through
// the counit equations.
struct EMAlgebra {
  FinSpace base;                         // A
  FinSpace b;                            // B
  std::vector<CMap> carrier;             // Hom(B, A)
  FinSpace carrier_power;                // A^Hom(B,A)
  CMap counit_map;                       // eps_B
  bool structure_materialized = false;
  std::vector<std::uint32_t> structure;  // T(carrier) enum order -> carrier index
};

EMAlgebra comparison_algebra(const FinSpace& a, const FinSpace& b, const Budget& budget = {});
MonadReport verify_algebra(const EMAlgebra& alg, const Budget& budget = {});

// A retraction t with t . f = id, found by pinned search, if one exists.
std::optional<CMap> split_mono(const CMap& f);

struct ProbeRecord {
  std::string id;
  std::string status;  // pass | fail | skipped-budget
  std::string note;
};

struct ProbeReport {
  std::string subject;
  int n_max = 0;
  std::vector<ProbeRecord> records;
  bool clean() const {
    for (const auto& r : records)
      if (r.status == "fail") return false;
    return true;
  }
};

// For every space B of <= n_max points (iso representatives): detects
// membership in the reflective-hull approximation (retract of a power of A,
// via a retraction for the counit), then checks the counit is a regular mono
// in the hull context for members; for indiscrete A, checks the counit splits;
// and checks that maps between members inducing a bijection on Hom(-,A) are
// homeomorphisms.
ProbeReport faithfulness_probe(const FinSpace& a, int n_max, const Budget& budget = {});

}  // namespace fintop

#endif
