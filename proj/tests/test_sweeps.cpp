// Exhaustive universal-property sweeps and the heavier structural invariants.
#include <doctest.h>

#include "fintop/cat.hpp"
#include "fintop/closure.hpp"
#include "fintop/hom.hpp"

using namespace fintop;

namespace {

std::vector<FinSpace> reps_up_to(int n_max) {
  std::vector<FinSpace> out;
  for (int n = 0; n <= n_max; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) out.push_back(x);
  return out;
}

// dedicated equalizer oracle: e is couniversal among maps equalizing f and g
bool verify_equalizer(const CMap& e, const CMap& f, const CMap& g, int bound) {
  if (compose(f, e).table() != compose(g, e).table()) return false;
  for (const FinSpace& v : reps_up_to(bound))
    for (const CMap& d : hom_set(v, f.dom())) {
      if (compose(f, d).table() != compose(g, d).table()) continue;
      int count = 0;
      for (const CMap& h : hom_set(v, e.dom()))
        if (compose(e, h).table() == d.table()) ++count;
      if (count != 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("pushouts are couniversal on every small span") {
  auto all2 = reps_up_to(2);
  for (const FinSpace& x : all2)
    for (const FinSpace& y1 : all2)
      for (const CMap& f : hom_set(x, y1))
        for (const FinSpace& y2 : all2)
          for (const CMap& g : hom_set(x, y2)) {
            Cospan po = pushout(f, g);
            CHECK(verify_couniversal(po, Span{f, g}, 2));
          }
}

TEST_CASE("pushouts are couniversal on sampled three-point spans") {
  auto all3 = reps_up_to(3);
  std::size_t counter = 0, verified = 0;
  for (const FinSpace& x : all3)
    for (const FinSpace& y1 : all3)
      for (const CMap& f : hom_set(x, y1))
        for (const FinSpace& y2 : all3)
          for (const CMap& g : hom_set(x, y2)) {
            if (++counter % 97 != 0) continue;  // deterministic sample
            ++verified;
            CHECK(verify_couniversal(pushout(f, g), Span{f, g}, 3));
          }
  CHECK(verified > 100);
}

TEST_CASE("pullbacks and equalizers are universal on every small cospan") {
  auto all2 = reps_up_to(2);
  for (const FinSpace& y1 : all2)
    for (const FinSpace& b : all2)
      for (const CMap& f : hom_set(y1, b))
        for (const FinSpace& y2 : all2)
          for (const CMap& g : hom_set(y2, b)) {
            Span pb = pullback(f, g);
            CHECK(verify_universal(pb, Cospan{f, g}, 2));
          }
  for (const FinSpace& x : all2)
    for (const FinSpace& y : all2)
      for (const CMap& f : hom_set(x, y))
        for (const CMap& g : hom_set(x, y)) CHECK(verify_equalizer(equalizer(f, g), f, g, 2));
}

TEST_CASE("products are universal") {
  auto all2 = reps_up_to(2);
  for (const FinSpace& x : all2)
    for (const FinSpace& y : all2) {
      auto [p, p1, p2] = product(x, y);
      // a product is a pullback over the point only when both map to it; use
      // the dedicated dual oracle over spans with the empty cospan shape:
      // check directly that pairs of maps into x and y factor uniquely
      for (const FinSpace& v : all2) {
        auto homs_x = hom_set(v, x);
        auto homs_y = hom_set(v, y);
        auto homs_p = hom_set(v, p);
        for (const CMap& d1 : homs_x)
          for (const CMap& d2 : homs_y) {
            int count = 0;
            for (const CMap& h : homs_p)
              if (compose(p1, h).table() == d1.table() && compose(p2, h).table() == d2.table())
                ++count;
            CHECK(count == 1);
          }
      }
    }
}

TEST_CASE("reflections satisfy the universal property") {
  for (const char* name : {"top0", "ind", "zerodim"}) {
    Subcategory ctx = builtin_context(name);
    auto members = member_reps([&](const FinSpace& s) { return ctx.member(s); }, 3);
    for (const FinSpace& x : reps_up_to(3)) {
      Reflection r = ctx.reflect(x);
      for (const FinSpace& b : members)
        for (const CMap& g : hom_set(x, b)) {
          int count = 0;
          for (const CMap& h : hom_set(r.object, b))
            if (compose(h, r.arrow).table() == g.table()) ++count;
          CHECK(count == 1);
        }
    }
  }
}

TEST_CASE("factorization properties on every small map") {
  Subcategory top = Subcategory::top();
  auto all3 = reps_up_to(3);
  for (const FinSpace& x : all3)
    for (const FinSpace& y : all3)
      for (const CMap& f : hom_set(x, y)) {
        auto [e, m] = factorize(f);
        CHECK(compose(m, e) == f);
        CHECK(e.surjective());
        CHECK(epi_in(top, e));
        CHECK(is_embedding(m));
      }
}

TEST_CASE("closure axioms hold in every built-in context") {
  for (const char* name : {"top", "top0", "ind", "sob", "zerodim"}) {
    Subcategory ctx = builtin_context(name);
    for (ClosureOp op : {ClosureOp::regular, ClosureOp::orthogonal}) {
      AxiomReport ax = operator_axioms(ctx, op, 3);
      CHECK(ax.clean());
      AxiomReport hi = hereditary_idempotent(ctx, op, 3);
      CHECK(hi.clean());
    }
  }
}

TEST_CASE("zero-dimensionality matches its order characterization") {
  // a finite space is zero-dimensional exactly when specialization is symmetric
  for (int n = 0; n <= 4; ++n)
    for (const FinSpace& x : enumerate_spaces(n, false)) {
      bool symmetric = true;
      for (int a = 0; a < n && symmetric; ++a)
        for (int b = 0; b < n && symmetric; ++b)
          if (x.leq(a, b) != x.leq(b, a)) symmetric = false;
      CHECK(x.is_zero_dimensional() == symmetric);
    }
}

TEST_CASE("regular monomorphisms in the full category are the embeddings") {
  Subcategory top = Subcategory::top();
  auto all3 = reps_up_to(3);
  for (const FinSpace& x : all3)
    for (const FinSpace& y : all3)
      for (const CMap& f : hom_set(x, y)) CHECK(regular_mono_in(top, f) == is_embedding(f));
}

TEST_CASE("epimorphisms of finite T0 spaces are the surjections") {
  Subcategory top0 = Subcategory::top0();
  auto t0 = member_reps([](const FinSpace& s) { return s.is_t0(); }, 3);
  for (const FinSpace& x : t0)
    for (const FinSpace& y : t0)
      for (const CMap& f : hom_set(x, y)) CHECK(epi_in(top0, f) == f.surjective());
}

TEST_CASE("members are closed under small limits") {
  for (const char* name : {"top0", "ind", "zerodim"}) {
    Subcategory ctx = builtin_context(name);
    auto members = member_reps([&](const FinSpace& s) { return ctx.member(s); }, 3);
    for (const FinSpace& x : members)
      for (const FinSpace& y : members) {
        if (x.points() * y.points() > 9) continue;
        CHECK(ctx.member(std::get<0>(product(x, y))));
        for (const CMap& f : hom_set(x, y))
          for (const CMap& g : hom_set(x, y)) CHECK(ctx.member(equalizer(f, g).dom()));
      }
  }
}
