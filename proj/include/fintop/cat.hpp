#ifndef FINTOP_CAT_HPP
#define FINTOP_CAT_HPP

#include <functional>
#include <string>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

// Two maps out of a shared domain.
struct Span {
  CMap left, right;
};

// Two maps into a shared codomain.
struct Cospan {
  CMap left, right;
};

std::tuple<FinSpace, CMap, CMap> product(const FinSpace& x, const FinSpace& y,
                                         const Budget& budget = {});
// k-fold power of A with its projection family; carrier indexed by base-|A|
// digit tuples, coordinate 0 least significant.
std::pair<FinSpace, std::vector<CMap>> power(const FinSpace& a, int k, const Budget& budget = {});

std::tuple<FinSpace, CMap, CMap> coproduct(const FinSpace& x, const FinSpace& y);

// Quotient of the common codomain by the smallest equivalence with f(x) ~ g(x),
// carrying the final topology. Class labels are the least original point id.
CMap coequalizer(const CMap& f, const CMap& g);

// Inclusion of the subspace where f and g agree.
CMap equalizer(const CMap& f, const CMap& g);

// legs: left into cod(f), right into cod(g); carrier = pairs with equal values
// in the shared codomain, carrying the subspace-of-product topology.
Span pullback(const CMap& f, const CMap& g, const Budget& budget = {});

// legs: left out of cod(f), right out of cod(g). The pushout of f along g is
// the right leg; of g along f the left leg.
Cospan pushout(const CMap& f, const CMap& g, const Budget& budget = {});
Cospan cokernel_pair(const CMap& m, const Budget& budget = {});

// (epi, embedding): f = m . e with e the surjection onto the image subspace.
std::pair<CMap, CMap> factorize(const CMap& f);

struct Reflection {
  FinSpace object;  // RX
  CMap arrow;       // r_X : X -> RX
};

// A reflective subcategory together with the ambient category it lives in
// (its epireflective hull). `member`/`reflect` describe the subcategory
// itself; `ambient_member`/`ambient_reflect` the hull, used for computing
// colimits of the ambient category.
class Subcategory {
 public:
  using Pred = std::function<bool(const FinSpace&)>;
  using Refl = std::function<Reflection(const FinSpace&, const Budget&)>;

  Subcategory(std::string name, Pred member, Refl reflect, Pred ambient_member,
              Refl ambient_reflect, bool m_reflective)
      : name_(std::move(name)),
        member_(std::move(member)),
        reflect_(std::move(reflect)),
        ambient_member_(std::move(ambient_member)),
        ambient_reflect_(std::move(ambient_reflect)),
        m_reflective_(m_reflective) {}

  static Subcategory top();
  static Subcategory top0();
  static Subcategory indiscrete();
  // Finite sober spaces are exactly the finite T0 spaces, so the reflector is
  // the T0 quotient; the counit acceptance checks re-verify the identification.
  static Subcategory sober_finite();
  static Subcategory zero_dimensional();
  // Epireflective hull of A: reflection is the image of the canonical map
  // X -> A^Hom(X,A) with the trace topology.
  static Subcategory hull_of(const FinSpace& a);

  const std::string& name() const { return name_; }
  bool member(const FinSpace& x) const { return member_(x); }
  Reflection reflect(const FinSpace& x, const Budget& budget = {}) const {
    return reflect_(x, budget);
  }
  bool ambient_member(const FinSpace& x) const { return ambient_member_(x); }
  Reflection ambient_reflect(const FinSpace& x, const Budget& budget = {}) const {
    return ambient_reflect_(x, budget);
  }
  bool m_reflective() const { return m_reflective_; }

 private:
  std::string name_;
  Pred member_;
  Refl reflect_;
  Pred ambient_member_;
  Refl ambient_reflect_;
  bool m_reflective_;
};

Subcategory builtin_context(const std::string& name);  // top|top0|ind|sob|zerodim

Reflection t0_quotient(const FinSpace& x);
Reflection indiscrete_reflection(const FinSpace& x);
Reflection zero_dim_reflection(const FinSpace& x);

// f is an epimorphism in the subcategory iff the reflected cokernel-pair legs
// coincide; exact, since the subcategory cokernel pair is the reflected one.
bool epi_in(const Subcategory& ctx, const CMap& f, const Budget& budget = {});

// m is a regular monomorphism in the subcategory iff it is isomorphic, as a
// subobject, to the equalizer of its reflected cokernel pair.
bool regular_mono_in(const Subcategory& ctx, const CMap& m, const Budget& budget = {});

// Exhaustive oracle: the cospan is couniversal over the span among all
// codomains of at most `bound` points (isomorphism representatives).
bool verify_couniversal(const Cospan& c, const Span& over, int bound, const Budget& budget = {});
// Dual oracle for limit shapes (pullbacks, products).
bool verify_universal(const Span& s, const Cospan& over, int bound, const Budget& budget = {});

// Isomorphism representatives of spaces with at most n_max points satisfying
// the predicate, in deterministic order (ascending size, enumeration order).
std::vector<FinSpace> member_reps(const std::function<bool(const FinSpace&)>& pred, int n_max);

// m <= n as subobjects of their common codomain (a continuous factorization
// m = n . d exists); both maps must be embeddings.
bool subobject_leq(const CMap& m, const CMap& n);
bool subobject_iso(const CMap& m, const CMap& n);

}  // namespace fintop

#endif
