#include <doctest.h>

#include <algorithm>
#include <random>

#include "fintop/hom.hpp"
#include "oracles.hpp"

using namespace fintop;

TEST_CASE("hom enumeration counts and contents") {
  auto endos = hom_set(sierpinski(), sierpinski());
  REQUIRE(endos.size() == 3);
  CHECK(endos[0].table() == std::vector<Pt>{0, 0});
  CHECK(endos[1].table() == std::vector<Pt>{0, 1});
  CHECK(endos[2].table() == std::vector<Pt>{1, 1});

  CHECK(hom_count(point_space(), space_a1()) == 3);
  CHECK(hom_count(point_space(), space_a2()) == 3);
  auto consts = hom_set(indiscrete_space(2), discrete_space(2));
  REQUIRE(consts.size() == 2);
  CHECK(consts[0].table() == std::vector<Pt>{0, 0});
  CHECK(consts[1].table() == std::vector<Pt>{1, 1});

  CHECK(hom_count(empty_space(), sierpinski()) == 1);
  CHECK(hom_count(sierpinski(), empty_space()) == 0);
}

TEST_CASE("hom enumeration agrees with the brute-force oracle") {
  std::vector<FinSpace> all;
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) all.push_back(x);
  for (const FinSpace& x : all)
    for (const FinSpace& y : all) {
      auto expected = oracles::all_continuous_tables(x, y);
      std::sort(expected.begin(), expected.end());
      auto got = hom_set(x, y);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].table() == expected[i]);
    }
}

TEST_CASE("two-valued fast path matches the general enumerator") {
  std::vector<FinSpace> doms;
  for (int n = 0; n <= 4; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) doms.push_back(x);
  for (const FinSpace& a : {sierpinski(), discrete_space(2), indiscrete_space(2)})
    for (const FinSpace& x : doms) {
      std::vector<Mask> fast;
      for_each_two_valued_hom(x, a, [&](Mask m) {
        fast.push_back(m);
        return true;
      });
      std::vector<Mask> general;
      for_each_hom(x, a, [&](const std::vector<Pt>& t) {
        Mask m = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i] == 1) m |= Mask(1) << i;
        general.push_back(m);
        return true;
      });
      CHECK(fast == general);
    }
}

TEST_CASE("hom count is a homeomorphism invariant in both arguments") {
  std::mt19937 rng(987654);
  for (const FinSpace& x : enumerate_spaces(3, false))
    for (const FinSpace& a : {sierpinski(), space_a1(), space_a2()}) {
      std::vector<Pt> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(hom_count(x, a) == hom_count(relabel(x, perm), a));
      std::vector<Pt> aperm(std::size_t(a.points()), 0);
      for (int i = 0; i < a.points(); ++i) aperm[std::size_t(i)] = i;
      std::shuffle(aperm.begin(), aperm.end(), rng);
      CHECK(hom_count(x, a) == hom_count(x, relabel(a, aperm)));
    }
}

TEST_CASE("injectivity along maps") {
  // an isomorphism leaves every object injective
  CHECK(injective_along(space_a2(), CMap::identity(sierpinski())));
  // small embeddings are injective for the three-point chain-like object
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& y : enumerate_spaces(n, true))
      for (Mask s = 0; s < (Mask(1) << n); ++s)
        CHECK(injective_along(space_a1(), subspace64(y, s).second));
  // collapsing an indiscrete pair is invisible to the Sierpinski space
  // (maps into it out of an indiscrete pair are constant)
  CMap squash(indiscrete_space(2), point_space(), {0, 0});
  CHECK(injective_along(sierpinski(), squash));
  // but separating maps into the three-point space cannot be recovered
  CHECK(!injective_along(space_a1(), squash));
  // collapsing a discrete pair loses a genuinely two-valued map
  CMap squash_d(discrete_space(2), point_space(), {0, 0});
  CHECK(!injective_along(sierpinski(), squash_d));
}

TEST_CASE("orthogonality along maps") {
  CHECK(orthogonal_along(sierpinski(), CMap::identity(space_a2())));
  CMap squash(indiscrete_space(2), point_space(), {0, 0});
  CHECK(orthogonal_along(sierpinski(), squash));
  CMap squash_s(sierpinski(), point_space(), {0, 0});
  CHECK(!orthogonal_along(sierpinski(), squash_s));  // 3 maps against 2

  // orthogonality implies injectivity
  std::vector<FinSpace> all;
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) all.push_back(x);
  for (const FinSpace& a : {sierpinski(), space_a1(), indiscrete_space(2)})
    for (const FinSpace& x : all)
      for (const FinSpace& y : all)
        for (const CMap& f : hom_set(x, y))
          if (orthogonal_along(a, f)) CHECK(injective_along(a, f));
}

TEST_CASE("clopen lifting") {
  CHECK(clopen_lifting(subspace64(sierpinski(), 0b01).second));
  // the discrete pair sits inside the three-point space with clopens {0},{1,2}
  CMap disc_in_a2(discrete_space(2), space_a2(), {0, 1});
  CHECK(is_embedding(disc_in_a2));
  CHECK(clopen_lifting(disc_in_a2));
  // domains with only trivial clopens always lift
  CHECK(clopen_lifting(subspace64(space_a1(), 0b110).second));
  CHECK_THROWS_WITH_AS(clopen_lifting(CMap::constant(sierpinski(), point_space(), 0)),
                       doctest::Contains("NotAnEmbedding"), Error);
}

TEST_CASE("pinned hom search") {
  // an up-set separating 1 from 0 exists in the Sierpinski space
  CHECK(find_hom_with_pins(sierpinski(), sierpinski(), {{1, 1}, {0, 0}}));
  // but none separating 0 from 1 the other way around
  CHECK(!find_hom_with_pins(sierpinski(), sierpinski(), {{0, 1}, {1, 0}}));
  // conflicting pins on the same point
  CHECK(!find_hom_with_pins(sierpinski(), sierpinski(), {{0, 0}, {0, 1}}));
}

TEST_CASE("pushout stability verdicts") {
  Subcategory top = Subcategory::top();
  CMap m = subspace64(sierpinski(), 0b01).second;
  auto v = pushout_stability(top, m, 3);
  CHECK(v.stable());
  CHECK(v.bound == 3);
  CHECK(!v.witness.has_value());

  CHECK(pushout_stability(top, CMap::identity(space_a2()), 2).stable());
  CHECK(pushout_stability(Subcategory::top0(), m, 3).stable());

  CHECK_THROWS_WITH_AS(pushout_stability(top, CMap::constant(sierpinski(), point_space(), 0), 2),
                       doctest::Contains("NotAnEmbedding"), Error);
  CHECK_THROWS_WITH_AS(
      pushout_stability(Subcategory::top0(), CMap::identity(indiscrete_space(2)), 2),
      doctest::Contains("NotInSubcategory"), Error);

  // a deliberately broken context (reflects everything to its indiscrete
  // coarsening) destroys stability and must produce a witness
  Subcategory broken(
      "broken", [](const FinSpace&) { return true; },
      [](const FinSpace& x, const Budget&) { return indiscrete_reflection(x); },
      [](const FinSpace&) { return true; },
      [](const FinSpace& x, const Budget&) { return indiscrete_reflection(x); }, false);
  auto broken_verdict = pushout_stability(broken, CMap::identity(sierpinski()), 2);
  CHECK(!broken_verdict.stable());
  REQUIRE(broken_verdict.witness.has_value());
  CHECK(!is_embedding(broken_verdict.witness->pushout_leg));
}

TEST_CASE("equivalence sweeps at small scale") {
  auto rep = sweep_equivalence(Subcategory::top(), space_a1(), 2, SweepMode::inj_vs_embedding);
  CHECK(rep.clean());
  CHECK(rep.maps > 0);

  auto rep0 = sweep_equivalence(Subcategory::top0(), sierpinski(), 2, SweepMode::inj_vs_embedding);
  CHECK(rep0.clean());

  // the Sierpinski space does not characterize embeddings in the full category
  auto bad = sweep_equivalence(Subcategory::top(), sierpinski(), 2, SweepMode::inj_vs_embedding);
  CHECK(!bad.clean());

  auto repz = sweep_equivalence(Subcategory::zero_dimensional(), space_a2(), 2,
                                SweepMode::inj_vs_clopen_lifting);
  CHECK(repz.clean());
  CHECK(repz.clopen_failure_found.has_value());
  CHECK(!repz.clopen_failure_found.value());
}

TEST_CASE("hom enumeration respects budgets and aborts") {
  Budget tiny;
  tiny.max_maps = 2;
  CHECK_THROWS_WITH_AS(hom_set(sierpinski(), sierpinski(), tiny),
                       doctest::Contains("SizeBudgetExceeded"), Error);
  std::size_t seen = 0;
  bool completed = for_each_hom(sierpinski(), sierpinski(), [&](const std::vector<Pt>&) {
    return ++seen < 2;
  });
  CHECK(!completed);
  CHECK(seen == 2);
}

TEST_CASE("linear extension respects the strict order") {
  for (int n = 0; n <= 4; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) {
      auto lin = linear_extension(x);
      std::vector<int> pos(std::size_t(n), 0);
      for (int i = 0; i < n; ++i) pos[std::size_t(lin[std::size_t(i)])] = i;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (x.leq(a, b) && !x.leq(b, a)) CHECK(pos[std::size_t(a)] < pos[std::size_t(b)]);
    }
}

TEST_CASE("injectivity classes compose and cancel") {
  std::vector<FinSpace> all;
  for (int n = 0; n <= 2; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) all.push_back(x);
  for (const FinSpace& a : {space_a1(), sierpinski(), indiscrete_space(2)})
    for (const FinSpace& x : all)
      for (const FinSpace& y : all)
        for (const CMap& n_map : hom_set(x, y))
          for (const FinSpace& z : all)
            for (const CMap& m_map : hom_set(y, z)) {
              CMap mn = compose(m_map, n_map);
              if (injective_along(a, m_map) && injective_along(a, n_map))
                CHECK(injective_along(a, mn));
              if (injective_along(a, mn)) CHECK(injective_along(a, n_map));
            }
}
