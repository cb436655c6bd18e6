#include <doctest.h>

#include <unordered_map>

#include "fintop/monad.hpp"
#include "oracles.hpp"

using namespace fintop;

TEST_CASE("monad sizes match the brute-force hom counts") {
  // T(n) via brute force first, then via the instance
  FinSpace s = sierpinski();
  for (int n = 0; n <= 2; ++n) {
    FinSpace pw = power(s, n).first;
    std::size_t brute = oracles::all_continuous_tables(pw, s).size();
    MonadInstance mi = monad_at(s, n);
    CHECK(mi.t_elements.size() == brute);
  }
  const std::size_t expect_s[3] = {2, 3, 6};
  const std::size_t expect_tt_s[3] = {6, 20, 7828354};
  for (int n = 0; n <= 2; ++n) {
    MonadInstance mi = monad_at(s, n);
    CHECK(mi.t_elements.size() == expect_s[n]);
    CHECK(mi.mult.size() == expect_tt_s[n]);
  }

  FinSpace i2 = indiscrete_space(2);
  const std::size_t expect_i[2] = {2, 4};
  const std::size_t expect_tt_i[2] = {16, 65536};
  for (int n = 0; n <= 1; ++n) {
    MonadInstance mi = monad_at(i2, n);
    CHECK(mi.t_elements.size() == expect_i[n]);
    CHECK(mi.mult.size() == expect_tt_i[n]);
  }

  for (int n = 0; n <= 2; ++n) CHECK(monad_at(point_space(), n).t_elements.size() == 1);
}

TEST_CASE("monad budget rejections") {
  CHECK_THROWS_WITH_AS(monad_at(sierpinski(), 3), doctest::Contains("SizeBudgetExceeded"), Error);
  CHECK_THROWS_WITH_AS(monad_at(indiscrete_space(2), 2), doctest::Contains("SizeBudgetExceeded"),
                       Error);
}

TEST_CASE("monad laws hold") {
  for (int n = 0; n <= 2; ++n) {
    MonadReport rep = verify_monad(monad_at(sierpinski(), n));
    CHECK(rep.clean());
    if (n == 0) {
      // the raw triple-power sweep must have run here
      bool found_full = false;
      for (const auto& law : rep.laws)
        if (law.method == "pointwise over T(T(T(n)))" && !law.skipped) {
          found_full = true;
          CHECK(law.checked == 7828354);
        }
      CHECK(found_full);
    }
  }
  for (int n = 0; n <= 1; ++n) CHECK(verify_monad(monad_at(indiscrete_space(2), n)).clean());
  for (int n = 0; n <= 2; ++n) CHECK(verify_monad(monad_at(point_space(), n)).clean());
}

TEST_CASE("elements of T correspond to the opens of the power") {
  FinSpace s = sierpinski();
  for (int n = 0; n <= 2; ++n) {
    MonadInstance mi = monad_at(s, n);
    auto opens = mi.domain_power.opens();
    REQUIRE(mi.t_elements.size() == opens.size());
    std::vector<Mask> masks;
    for (const CMap& f : mi.t_elements) {
      Mask m = 0;
      for (int p = 0; p < mi.domain_power.points(); ++p)
        if (f(p) == 1) m |= Mask(1) << p;
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    CHECK(masks == opens);
  }
}

namespace {

// index of a table inside the instance's T enumeration
int t_index_of(const MonadInstance& mi, const std::vector<Pt>& table) {
  for (std::size_t j = 0; j < mi.t_elements.size(); ++j)
    if (mi.t_elements[j].table() == table) return int(j);
  return -1;
}

// T(h) for a set map h : m -> k between carriers, as an index map
std::vector<int> t_of_function(const MonadInstance& from, const MonadInstance& to,
                               const std::vector<int>& h) {
  const int base = from.base.points();
  // A^h : A^k -> A^m pointwise
  std::vector<Pt> pm(std::size_t(to.domain_power.points()), 0);
  for (int p = 0; p < to.domain_power.points(); ++p) {
    long long idx = 0, scale = 1;
    for (int i = 0; i < from.carrier; ++i) {
      long long digit = p;
      for (int d = 0; d < h[std::size_t(i)]; ++d) digit /= base;
      idx += (digit % base) * scale;
      scale *= base;
    }
    pm[std::size_t(p)] = Pt(idx);
  }
  std::vector<int> out;
  for (const CMap& phi : from.t_elements) {
    std::vector<Pt> comp(std::size_t(to.domain_power.points()), 0);
    for (int p = 0; p < to.domain_power.points(); ++p) comp[std::size_t(p)] = phi(pm[std::size_t(p)]);
    out.push_back(t_index_of(to, comp));
  }
  return out;
}

// mask-indexed copy of the instance's T enumeration (base must be 2 points)
std::unordered_map<Mask, int> t_mask_index(const MonadInstance& mi) {
  std::unordered_map<Mask, int> out;
  for (std::size_t j = 0; j < mi.t_elements.size(); ++j) {
    Mask m = 0;
    for (int p = 0; p < mi.domain_power.points(); ++p)
      if (mi.t_elements[j](p) == 1) m |= Mask(1) << p;
    out.emplace(m, int(j));
  }
  return out;
}

// mu applied to an arbitrary mask over the double power, computed directly
int mu_direct(const MonadInstance& mi, Mask theta, const std::unordered_map<Mask, int>& index) {
  Mask comp = 0;
  for (int w = 0; w < mi.domain_power.points(); ++w)
    if ((theta >> mi.power_counit[std::size_t(w)]) & 1u) comp |= Mask(1) << w;
  auto it = index.find(comp);
  return it == index.end() ? -1 : it->second;
}

}  // namespace

TEST_CASE("unit and multiplication are natural for the Sierpinski monad") {
  FinSpace s = sierpinski();
  std::vector<MonadInstance> inst;
  std::vector<std::unordered_map<Mask, int>> indexes;
  for (int n = 0; n <= 2; ++n) {
    inst.push_back(monad_at(s, n));
    indexes.push_back(t_mask_index(inst.back()));
  }

  std::size_t eta_bad = 0, mu_bad = 0, mu_checked = 0;
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k) {
      if (m > 0 && k == 0) continue;
      std::vector<int> h(std::size_t(m), 0);  // every function h : m -> k
      for (;;) {
        std::vector<int> th = t_of_function(inst[std::size_t(m)], inst[std::size_t(k)], h);
        // eta naturality: T(h)(eta_m(x)) == eta_k(h(x))
        for (int x = 0; x < m; ++x)
          if (th[std::size_t(inst[std::size_t(m)].unit[std::size_t(x)])] !=
              inst[std::size_t(k)].unit[std::size_t(h[std::size_t(x)])])
            ++eta_bad;
        // mu naturality: mu_k . T(T(h)) == T(h) . mu_m, pointwise over T(T(m))
        const MonadInstance& from = inst[std::size_t(m)];
        const MonadInstance& to = inst[std::size_t(k)];
        const auto& to_index = indexes[std::size_t(k)];
        // A^{T(h)} : A^{T(k)} -> A^{T(m)} pointwise
        std::vector<Pt> pm(std::size_t(to.double_power.points()), 0);
        for (int p = 0; p < to.double_power.points(); ++p) {
          long long idx = 0, scale = 1;
          for (std::size_t j = 0; j < from.t_elements.size(); ++j) {
            long long digit = p;
            for (int d = 0; d < th[j]; ++d) digit /= 2;
            idx += (digit % 2) * scale;
            scale *= 2;
          }
          pm[std::size_t(p)] = Pt(idx);
        }
        std::size_t i = 0;
        const int to_dp = to.double_power.points();
        for_each_two_valued_hom(from.double_power, s, [&](Mask psi) {
          // T(T(h))(psi) as a mask over to.double_power
          Mask moved = 0;
          for (int p = 0; p < to_dp; ++p)
            if ((psi >> pm[std::size_t(p)]) & 1u) moved |= Mask(1) << p;
          if (mu_direct(to, moved, to_index) != th[std::size_t(from.mult[i])]) ++mu_bad;
          ++mu_checked;
          ++i;
          return true;
        });
        // next function
        int j = 0;
        while (j < m && h[std::size_t(j)] == k - 1) h[std::size_t(j++)] = 0;
        if (j == m) break;
        ++h[std::size_t(j)];
      }
    }
  CHECK(eta_bad == 0);
  CHECK(mu_bad == 0);
  CHECK(mu_checked > 2 * 7828354);  // the carrier-2 instances really were swept
}

TEST_CASE("counit projections recover every map") {
  FinSpace s = sierpinski(), i2 = indiscrete_space(2), a1 = space_a1();
  CMap eps_pt = counit(s, point_space());
  CHECK(eps_pt.cod().points() == 4);  // S^2
  CMap eps_s = counit(s, s);
  CHECK(eps_s.cod().points() == 8);  // S^3
  CHECK(is_embedding(eps_s));

  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& b : enumerate_spaces(n, true)) {
      if (b.is_t0()) CHECK(is_embedding(counit(s, b)));
      // the defining equations, via the coordinate table, for all three bases
      for (const FinSpace& a : {s, i2, a1}) {
        CounitTable tab = counit_table(a, b);
        for (std::size_t g = 0; g < tab.homs.size(); ++g)
          for (int p = 0; p < b.points(); ++p)
            CHECK(tab.coords[std::size_t(p)][g] == tab.homs[g](p));
      }
    }

  // the three-point dualizer overflows the power budget on a discrete triple
  CHECK_THROWS_WITH_AS(counit(a1, discrete_space(3)), doctest::Contains("SizeBudgetExceeded"),
                       Error);
}

TEST_CASE("comparison algebras satisfy both laws") {
  EMAlgebra ss = comparison_algebra(sierpinski(), sierpinski());
  CHECK(ss.carrier.size() == 3);
  CHECK(ss.structure_materialized);
  CHECK(ss.structure.size() == 20);
  CHECK(verify_algebra(ss).clean());

  EMAlgebra ii = comparison_algebra(indiscrete_space(2), indiscrete_space(2));
  CHECK(ii.carrier.size() == 4);
  CHECK(ii.structure_materialized);
  CHECK(ii.structure.size() == 65536);
  CHECK(verify_algebra(ii).clean());

  EMAlgebra big = comparison_algebra(indiscrete_space(2), indiscrete_space(3));
  CHECK(big.carrier.size() == 8);
  CHECK(!big.structure_materialized);
  CHECK(verify_algebra(big).clean());

  EMAlgebra from_empty = comparison_algebra(sierpinski(), empty_space());
  CHECK(from_empty.carrier.size() == 1);
  CHECK(verify_algebra(from_empty).clean());

  EMAlgebra spt = comparison_algebra(sierpinski(), point_space());
  CHECK(verify_algebra(spt).clean());
}

TEST_CASE("split mono search") {
  // a point includes with an obvious retraction
  CMap pt_in(point_space(), sierpinski(), {0});
  auto r = split_mono(pt_in);
  REQUIRE(r.has_value());
  CHECK(compose(*r, pt_in) == CMap::identity(point_space()));

  // counits of indiscrete spaces always split
  CMap eps = counit(indiscrete_space(2), indiscrete_space(2));
  auto r2 = split_mono(eps);
  REQUIRE(r2.has_value());
  CHECK(compose(*r2, eps) == CMap::identity(indiscrete_space(2)));

  // the frozen negative: discrete {0,1} inside the 3-point space whose opens
  // are generated by {0} and {1} admits no retraction
  FinSpace y = FinSpace::from_opens(3, {0b000, 0b001, 0b010, 0b011, 0b111});
  CMap incl(discrete_space(2), y, {0, 1});
  CHECK(is_embedding(incl));
  CHECK(!split_mono(incl).has_value());

  // non-injective maps never split
  CHECK(!split_mono(CMap::constant(sierpinski(), point_space(), 0)).has_value());

  // a split mono into anything is an embedding
  std::vector<FinSpace> all;
  for (int n = 0; n <= 3; ++n)
    for (const FinSpace& x : enumerate_spaces(n, true)) all.push_back(x);
  for (const FinSpace& x : all)
    for (const FinSpace& y2 : all)
      for (const CMap& f : hom_set(x, y2))
        if (split_mono(f)) CHECK(is_embedding(f));
}

TEST_CASE("law verification detects corruption") {
  // a flipped multiplication entry must fail the defining-equation sweep
  MonadInstance broken = monad_at(sierpinski(), 1);
  broken.mult[0] = std::uint32_t((broken.mult[0] + 1) % broken.t_elements.size());
  CHECK(!verify_monad(broken).clean());

  // a corrupted unit must fail a unit law
  MonadInstance wrong_unit = monad_at(sierpinski(), 1);
  wrong_unit.unit[0] = (wrong_unit.unit[0] + 1) % int(wrong_unit.t_elements.size());
  CHECK(!verify_monad(wrong_unit).clean());

  // a corrupted algebra structure must fail the action sweep
  EMAlgebra alg = comparison_algebra(sierpinski(), sierpinski());
  alg.structure[5] = std::uint32_t((alg.structure[5] + 1) % alg.carrier.size());
  CHECK(!verify_algebra(alg).clean());
}

TEST_CASE("faithfulness probe") {
  ProbeReport pr = faithfulness_probe(sierpinski(), 3);
  CHECK(pr.clean());
  CHECK(faithfulness_probe(point_space(), 2).clean());
  ProbeReport pi = faithfulness_probe(indiscrete_space(2), 3);
  CHECK(pi.clean());
  // indiscrete counit-split records must actually be present
  bool saw_split = false;
  for (const auto& r : pi.records)
    if (r.id.find("counit-splits") != std::string::npos) saw_split = true;
  CHECK(saw_split);
}
