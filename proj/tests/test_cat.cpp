#include <doctest.h>

#include "fintop/cat.hpp"
#include "fintop/hom.hpp"
#include "oracles.hpp"

using namespace fintop;

TEST_CASE("products and powers") {
  auto [ss, p1, p2] = product(sierpinski(), sierpinski(), Budget{});
  CHECK(ss.points() == 4);
  CHECK(ss.opens().size() == 6);
  CHECK(p1.surjective());
  CHECK(p2.surjective());

  auto [sp, q1, q2] = product(sierpinski(), point_space(), Budget{});
  CHECK(is_iso(q1));  // X x 1 is X

  auto [d4, projs] = power(discrete_space(2), 2, Budget{});
  CHECK(d4 == discrete_space(4));
  CHECK(projs.size() == 2);

  // the square power is the binary product up to relabeling
  CHECK(canonical_form(std::get<0>(power(sierpinski(), 2, Budget{}))) ==
        canonical_form(std::get<0>(product(sierpinski(), sierpinski(), Budget{}))));

  auto [one, no_projs] = power(sierpinski(), 0, Budget{});
  CHECK(one == point_space());
  CHECK(no_projs.empty());

  Budget tight;
  tight.max_points = 100;
  CHECK_THROWS_WITH_AS(power(sierpinski(), 12, tight), doctest::Contains("SizeBudgetExceeded"),
                       Error);
}

TEST_CASE("equalizers") {
  CMap id_s = CMap::identity(sierpinski());
  CMap eq = equalizer(id_s, id_s);
  CHECK(is_iso(eq));

  CMap c0 = CMap::constant(discrete_space(2), discrete_space(2), 0);
  CMap c1 = CMap::constant(discrete_space(2), discrete_space(2), 1);
  CHECK(equalizer(c0, c1).dom() == empty_space());

  CHECK_THROWS_WITH_AS(equalizer(id_s, CMap::identity(point_space())),
                       doctest::Contains("NotParallel"), Error);
}

TEST_CASE("cokernel pairs of the Sierpinski inclusions") {
  // gluing S to itself along the closed point 0
  CMap m0 = subspace64(sierpinski(), 0b01).second;
  Cospan cp0 = cokernel_pair(m0, Budget{});
  const FinSpace& w0 = cp0.left.cod();
  CHECK(w0.points() == 3);
  CHECK(w0.opens() == std::vector<Mask>{0b000, 0b010, 0b100, 0b110, 0b111});
  CHECK(cp0.left.table() == std::vector<Pt>{0, 1});
  CHECK(cp0.right.table() == std::vector<Pt>{0, 2});
  CMap eq0 = equalizer(cp0.left, cp0.right);
  CHECK(image_points(eq0) == std::vector<Pt>{0});

  // gluing S to itself along the open point 1
  CMap m1 = subspace64(sierpinski(), 0b10).second;
  Cospan cp1 = cokernel_pair(m1, Budget{});
  const FinSpace& w1 = cp1.left.cod();
  CHECK(w1.points() == 3);
  CHECK(w1.opens() == std::vector<Mask>{0b000, 0b010, 0b011, 0b110, 0b111});
  CHECK(cp1.left.table() == std::vector<Pt>{0, 1});
  CHECK(cp1.right.table() == std::vector<Pt>{2, 1});
}

TEST_CASE("pushout of a map along the identity") {
  CMap m = subspace64(sierpinski(), 0b01).second;
  CMap id = CMap::identity(m.dom());
  Cospan po = pushout(m, id, Budget{});
  // pushing out along the identity reproduces m up to isomorphism
  CHECK(is_embedding(po.right));
  CHECK(is_iso(po.left));
  CHECK(po.right.dom() == m.dom());
  CHECK(verify_couniversal(po, Span{m, id}, 3));
}

TEST_CASE("couniversality oracle rejects a non-commuting cospan") {
  CMap m = subspace64(sierpinski(), 0b01).second;
  CMap id = CMap::identity(m.dom());
  Cospan po = pushout(m, id, Budget{});
  Cospan swapped{po.left, CMap::constant(point_space(), po.left.cod(), 1)};
  CHECK(!verify_couniversal(swapped, Span{m, id}, 2));
}

TEST_CASE("coproducts and coequalizers") {
  auto [two, i1, i2] = coproduct(point_space(), point_space());
  CHECK(two == discrete_space(2));

  CMap id_s = CMap::identity(sierpinski());
  CMap q = coequalizer(id_s, id_s);
  CHECK(is_iso(q));

  CMap a = CMap::constant(point_space(), discrete_space(2), 0);
  CMap b = CMap::constant(point_space(), discrete_space(2), 1);
  CHECK(coequalizer(a, b).cod() == point_space());
}

TEST_CASE("pullbacks") {
  CMap m = subspace64(sierpinski(), 0b01).second;
  Span pb = pullback(m, CMap::identity(sierpinski()), Budget{});
  CHECK(is_iso(pb.left));  // pulling back along the identity changes nothing

  // two subspace inclusions pull back to the intersection
  FinSpace a2 = space_a2();
  CMap i01 = subspace64(a2, 0b011).second;
  CMap i12 = subspace64(a2, 0b110).second;
  Span meet = pullback(i01, i12, Budget{});
  CHECK(meet.left.dom().points() == 1);
  CHECK(compose(i01, meet.left).table() == std::vector<Pt>{1});
  CHECK(verify_universal(meet, Cospan{i01, i12}, 3));
}

TEST_CASE("epi-embedding factorization") {
  CMap c1 = CMap::constant(sierpinski(), sierpinski(), 1);
  auto [e, m] = factorize(c1);
  CHECK(compose(m, e) == c1);
  CHECK(e.surjective());
  CHECK(is_embedding(m));
  CHECK(m.dom() == point_space());
  CHECK(m.table() == std::vector<Pt>{1});

  CMap emb = subspace64(sierpinski(), 0b01).second;
  auto [e2, m2] = factorize(emb);
  CHECK(is_iso(e2));
  CMap surj = CMap::constant(sierpinski(), point_space(), 0);
  auto [e3, m3] = factorize(surj);
  CHECK(is_iso(m3));
}

TEST_CASE("built-in reflections") {
  // T0 quotient of the indiscrete pair collapses it to a point
  Reflection r = t0_quotient(indiscrete_space(2));
  CHECK(r.object == point_space());
  CHECK(r.arrow.table() == std::vector<Pt>{0, 0});

  // reflecting a T0 space changes nothing
  Reflection r2 = t0_quotient(sierpinski());
  CHECK(is_iso(r2.arrow));

  Reflection ri = indiscrete_reflection(sierpinski());
  CHECK(ri.object == indiscrete_space(2));

  Reflection rz = zero_dim_reflection(sierpinski());
  CHECK(rz.object == indiscrete_space(2));  // S is connected

  // the hull reflection of any small space agrees with the T0 quotient
  Subcategory hull_s = Subcategory::hull_of(sierpinski());
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) {
      Reflection h = hull_s.reflect(x);
      Reflection t = t0_quotient(x);
      REQUIRE(h.object.points() == t.object.points());
      // the identity-on-classes comparison map must be a homeomorphism
      std::vector<Pt> tab(std::size_t(h.object.points()), -1);
      for (int p = 0; p < x.points(); ++p) tab[std::size_t(h.arrow(p))] = t.arrow(p);
      CMap comparison(h.object, t.object, tab);
      CHECK(is_iso(comparison));
    }
}

TEST_CASE("hull reflections for three-point dualizers") {
  // any two points are separated by maps into the space with opens {0},{1 2},
  // and order is detected through clopens only, so its hull reflection is the
  // zero-dimensional one
  Subcategory hull_a2 = Subcategory::hull_of(space_a2());
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) {
      Reflection h = hull_a2.reflect(x);
      Reflection z = zero_dim_reflection(x);
      CHECK(h.object == z.object);
      CHECK(h.arrow == z.arrow);
    }

  // the space whose only nontrivial open is {0} detects the full order, so
  // everything reflects identically: every finite space embeds in its powers
  Subcategory hull_a1 = Subcategory::hull_of(space_a1());
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) {
      CHECK(is_iso(hull_a1.reflect(x).arrow));
      CHECK(hull_a1.member(x));
    }
}

TEST_CASE("context laws") {
  for (const char* name : {"top", "top0", "ind", "sob", "zerodim"}) {
    Subcategory ctx = builtin_context(name);
    for (int n = 0; n <= 3; ++n)
      for (const FinSpace& x : enumerate_spaces(n, true)) {
        Reflection r = ctx.reflect(x);
        CHECK(ctx.member(r.object));
        CHECK(is_iso(ctx.reflect(r.object).arrow));  // idempotent
        if (ctx.member(x)) CHECK(is_iso(r.arrow));
        CHECK(ctx.m_reflective());
      }
  }
  CHECK_THROWS_WITH_AS(builtin_context("frobnicate"), doctest::Contains("UnknownContext"), Error);
}

TEST_CASE("epimorphisms via reflected cokernel pairs") {
  Subcategory top = Subcategory::top();
  // in the full category, epi = surjective; checked on every small map
  std::vector<FinSpace> all;
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) all.push_back(x);
  for (const FinSpace& x : all)
    for (const FinSpace& y : all)
      for (const CMap& f : hom_set(x, y)) CHECK(epi_in(top, f) == f.surjective());

  Subcategory top0 = Subcategory::top0();
  CHECK(!epi_in(top0, subspace64(sierpinski(), 0b10).second));
  CHECK(!epi_in(top0, subspace64(sierpinski(), 0b01).second));
  CHECK(epi_in(top0, CMap::identity(sierpinski())));
  CHECK_THROWS_WITH_AS(epi_in(top0, CMap::identity(indiscrete_space(2))),
                       doctest::Contains("NotInSubcategory"), Error);
}

TEST_CASE("regular monomorphisms via reflected cokernel pairs") {
  Subcategory top0 = Subcategory::top0();
  CHECK(regular_mono_in(top0, subspace64(sierpinski(), 0b01).second));
  CHECK(regular_mono_in(top0, subspace64(sierpinski(), 0b10).second));
  CHECK(regular_mono_in(top0, CMap::identity(sierpinski())));
  // non-injective maps are never regular monos
  CHECK(!regular_mono_in(top0, CMap::constant(sierpinski(), point_space(), 0)));
}

TEST_CASE("shape mismatches are rejected") {
  CMap id_s = CMap::identity(sierpinski());
  CMap id_p = CMap::identity(point_space());
  CHECK_THROWS_AS(pullback(id_s, id_p), Error);
  CHECK_THROWS_AS(pushout(id_s, id_p), Error);
  CHECK_THROWS_WITH_AS(compose(id_s, id_p), doctest::Contains("NotComposable"), Error);
  CHECK_THROWS_AS(subspace(sierpinski(), {1, 0}), Error);
  CHECK_THROWS_AS(subspace(sierpinski(), {0, 5}), Error);
}

TEST_CASE("subobject comparisons") {
  FinSpace s = sierpinski();
  CMap m0 = subspace64(s, 0b01).second;
  CMap m01 = subspace64(s, 0b11).second;
  CHECK(subobject_leq(m0, m01));
  CHECK(!subobject_leq(m01, m0));
  CHECK(subobject_iso(m0, m0));
  CHECK(!subobject_iso(m0, m01));
}
