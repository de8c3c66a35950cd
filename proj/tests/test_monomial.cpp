#include <gtest/gtest.h>

#include <random>

#include "seqcm/monomial.hpp"
#include "support.hpp"

using namespace seqcm;
using namespace seqcm::testing;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int n, std::vector<std::vector<Exponent>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(n, ms);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> count(1, 4), exp(0, 3);
  std::vector<Monomial> gens;
  const int r = count(rng);
  for (int j = 0; j < r; ++j) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = exp(rng);
    if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) e[0] = 1;
    gens.emplace_back(e);
  }
  return MonomialIdeal(n, gens);
}

std::vector<Exponent> random_exponents(std::mt19937_64& rng, int n, Exponent top) {
  std::uniform_int_distribution<Exponent> d(0, top);
  std::vector<Exponent> e(n);
  for (auto& x : e) x = d(rng);
  return e;
}

std::vector<MonomialIdeal> radical_set(const std::vector<AssociatedRadical>& rs) {
  std::vector<MonomialIdeal> out;
  for (const auto& r : rs) out.push_back(r.radical);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Monomial, Arithmetic) {
  const Monomial a = mono({2, 0, 1}), b = mono({1, 3, 0});
  EXPECT_EQ(a * b, mono({3, 3, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_EQ(quotient(a, b), mono({1, 0, 1}));
  EXPECT_TRUE(mono({1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.to_string(), "x0^2*x2");
  EXPECT_EQ(Monomial::unit(3).to_string(), "1");
}

TEST(Monomial, SupportAndRadical) {
  EXPECT_EQ(support(mono({2, 0, 1})), 0b101u);
  EXPECT_EQ(radical_of_monomial(mono({2, 0, 1})), mono({1, 0, 1}));
  EXPECT_EQ(support(Monomial::unit(4)), 0u);
  EXPECT_EQ(radical_of_monomial(Monomial::unit(4)), Monomial::unit(4));
  const Monomial sf = Monomial::from_mask(5, 0b10110);
  EXPECT_EQ(radical_of_monomial(sf), sf);
}

TEST(MonomialIdeal, Minimalizes) {
  const MonomialIdeal i = ideal(3, {{1, 1, 0}, {2, 1, 0}, {1, 1, 0}, {0, 0, 2}});
  ASSERT_EQ(i.generators().size(), 2u);
  EXPECT_EQ(i.to_string(), "(x0*x1, x2^2)");
  EXPECT_FALSE(i.is_squarefree());
  EXPECT_TRUE(ideal(2, {{0, 0}, {1, 0}}).is_unit());
  EXPECT_EQ(MonomialIdeal::unit(2).to_string(), "(1)");
  EXPECT_EQ(MonomialIdeal(2, {}).to_string(), "(0)");
}

TEST(MonomialIdeal, ContainsMatchesDefinition) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const MonomialIdeal i = random_ideal(rng, 3);
    const auto a = random_exponents(rng, 3, 4);
    EXPECT_EQ(i.contains(mono(a)), brute_contains(i, a));
  }
}

TEST(WeightedEdgeIdeal, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(weighted_edge_ideal(p3, WeightFunction::constant(p3, 1)),
            MonomialIdeal::from_masks(3, {0b011, 0b110}));
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(weighted_edge_ideal(k2, WeightFunction(k2, {3})), ideal(2, {{3, 3}}));

  const Graph s = suspension_of_cycle(4);
  std::vector<std::uint32_t> w;
  for (const Edge& e : s.edges()) w.push_back(e.v < 4 ? 2 : 1);
  const MonomialIdeal i = weighted_edge_ideal(s, WeightFunction(s, w));
  ASSERT_EQ(i.generators().size(), 8u);
  int deg4 = 0, deg2 = 0;
  for (const Monomial& g : i.generators()) {
    deg4 += g.degree() == 4;
    deg2 += g.degree() == 2;
  }
  EXPECT_EQ(deg4, 4);
  EXPECT_EQ(deg2, 4);
  EXPECT_THROW(weighted_edge_ideal(p3, WeightFunction::constant(cycle_graph(3), 1)),
               std::invalid_argument);
}

TEST(Colon, Examples) {
  const MonomialIdeal p3 = MonomialIdeal::from_masks(3, {0b011, 0b110});
  EXPECT_EQ(colon_by_monomial(p3, mono({0, 1, 0})), MonomialIdeal::from_masks(3, {0b001, 0b100}));
  EXPECT_EQ(colon_by_monomial(p3, Monomial::unit(3)), p3);
  const MonomialIdeal i = ideal(3, {{2, 2, 0}, {1, 0, 1}});
  EXPECT_EQ(colon_by_monomial(i, mono({2, 1, 0})), MonomialIdeal::from_masks(3, {0b010, 0b100}));
  EXPECT_TRUE(colon_by_monomial(p3, mono({1, 1, 0})).is_unit());
}

TEST(Colon, MembershipOracleOnExample) {
  const MonomialIdeal i = ideal(3, {{2, 2, 0}, {1, 0, 1}});
  const Monomial u = mono({2, 1, 0});
  const MonomialIdeal c = colon_by_monomial(i, u);
  for (Exponent a = 0; a <= 4; ++a)
    for (Exponent b = 0; a + b <= 4; ++b)
      for (Exponent d = 0; a + b + d <= 4; ++d) {
        const Monomial m = mono({a, b, d});
        EXPECT_EQ(c.contains(m), brute_contains(i, (m * u).exponents()));
      }
}

TEST(Colon, MembershipLaw) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const MonomialIdeal i = random_ideal(rng, 3);
    const Monomial u = mono(random_exponents(rng, 3, 3));
    const Monomial m = mono(random_exponents(rng, 3, 3));
    EXPECT_EQ(colon_by_monomial(i, u).contains(m), brute_contains(i, (m * u).exponents()));
  }
}

TEST(RadicalColon, Examples) {
  const Graph s = suspension_of_cycle(4);
  std::vector<std::uint32_t> w;
  for (const Edge& e : s.edges()) w.push_back(e.v < 4 ? 2 : 1);
  const MonomialIdeal i = weighted_edge_ideal(s, WeightFunction(s, w));
  const MonomialIdeal expected =
      MonomialIdeal::from_masks(8, {0b0011, 0b0110, 0b1100, 0b1001, 0x10, 0x20, 0x40, 0x80});
  EXPECT_EQ(radical_colon(i, mono({1, 1, 1, 1, 0, 0, 0, 0})), expected);

  const MonomialIdeal sq = ideal(2, {{2, 2}});
  EXPECT_EQ(radical_colon(sq, Monomial::unit(2)), radical(sq));
  EXPECT_EQ(radical_colon(sq, mono({1, 0})), MonomialIdeal::from_masks(2, {0b11}));
  EXPECT_TRUE(radical_colon(sq, mono({2, 2})).is_unit());
}

TEST(RadicalColon, SaturationOracle) {
  // x0^k * (x0 x1) lies in ((x0 x1)^2) for no k, while (x0 x1)^2 * x0 does:
  // the radical of ((x0x1)^2 : x0) is (x0 x1) and x1 alone is not in it.
  const MonomialIdeal sq = ideal(2, {{2, 2}});
  const MonomialIdeal c = colon_by_monomial(sq, mono({1, 0}));
  for (Exponent k = 1; k <= 6; ++k) {
    EXPECT_FALSE(c.contains(mono({0, k})));
    EXPECT_FALSE(c.contains(mono({k, 0})));
  }
  EXPECT_TRUE(c.contains(mono({1, 2})));
}

TEST(RadicalColon, EqualsRadicalOfColonAndStabilizes) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 400; ++t) {
    const MonomialIdeal i = random_ideal(rng, 4);
    const auto a = random_exponents(rng, 4, 6);
    const Monomial u = mono(a);
    const MonomialIdeal rc = radical_colon(i, u);
    const MonomialIdeal c = colon_by_monomial(i, u);
    EXPECT_EQ(rc, c.is_unit() ? c : radical(c));
    const auto d = exponent_bound(i);
    std::vector<Exponent> b(4);
    for (int k = 0; k < 4; ++k) b[k] = std::min(a[k], d[k]);
    EXPECT_EQ(radical_colon(i, mono(b)), rc);
  }
}

TEST(AssociatedRadicals, Examples) {
  const MonomialIdeal xy = MonomialIdeal::from_masks(2, {0b11});
  std::vector<MonomialIdeal> expected = {MonomialIdeal::from_masks(2, {0b01}),
                                         MonomialIdeal::from_masks(2, {0b10}), xy};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(radical_set(enumerate_associated_radicals(xy)), expected);
  const MonomialIdeal sq = ideal(2, {{2, 2}});
  const auto rs = enumerate_associated_radicals(sq);
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[0].radical, xy);
  EXPECT_EQ(rs[0].witness, Monomial::unit(2));
}

TEST(AssociatedRadicals, ReducedScanMatchesFullScanAndBruteForce) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const MonomialIdeal i = random_ideal(rng, 4);
    if (!i.is_proper()) continue;
    const auto reduced = radical_set(enumerate_associated_radicals(i, LatticeScan::kReduced));
    const auto full = radical_set(enumerate_associated_radicals(i, LatticeScan::kFull));
    EXPECT_EQ(reduced, full);
    // Direct enumeration over a box beyond D, outside the library's walker.
    std::set<MonomialIdeal> brute;
    const auto d = exponent_bound(i);
    std::vector<Exponent> a(4, 0);
    while (true) {
      if (!brute_contains(i, a)) brute.insert(radical(colon_by_monomial(i, mono(a))));
      int k = 0;
      while (k < 4 && a[k] == d[k] + 1) a[k++] = 0;
      if (k == 4) break;
      ++a[k];
    }
    EXPECT_EQ(full, std::vector<MonomialIdeal>(brute.begin(), brute.end()));
    for (const auto& r : enumerate_associated_radicals(i)) {
      EXPECT_FALSE(i.contains(r.witness));
      EXPECT_EQ(radical_colon(i, r.witness), r.radical);
    }
  }
}

TEST(AssociatedRadicals, SquarefreeEdgeIdealShape) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.num_edges() == 0) continue;
      for (const auto& r : enumerate_associated_radicals(edge_ideal(g))) {
        VertexMask vars = 0, w = 0;
        for (VarMask m : r.radical.squarefree_masks()) {
          if (std::popcount(m) == 1) {
            vars |= m;
          } else {
            ASSERT_EQ(std::popcount(m), 2);
            ASSERT_TRUE(g.adjacent(std::countr_zero(m), 31 - std::countl_zero(m)));
            w |= m;
          }
        }
        // The radical is I(G[W]) + (x_v : v not in W) with W = V minus vars.
        const VertexMask rest = g.all_vertices() & ~vars;
        std::vector<VarMask> expected;
        for (const Edge& e : g.edges())
          if (bit_set(rest, e.u) && bit_set(rest, e.v)) expected.push_back((1u << e.u) | (1u << e.v));
        for (int v : mask_to_vector(vars)) expected.push_back(1u << v);
        EXPECT_EQ(MonomialIdeal::from_masks(n, expected), r.radical);
        EXPECT_EQ(w & ~rest, 0u);
      }
    }
  }
}

TEST(AssociatedPrimes, Examples) {
  EXPECT_EQ(associated_primes(MonomialIdeal::from_masks(2, {0b11})),
            (std::vector<VarMask>{0b01, 0b10}));
  EXPECT_EQ(associated_primes(MonomialIdeal::from_masks(3, {0b011, 0b110})),
            (std::vector<VarMask>{0b010, 0b101}));
  const MonomialIdeal sq = ideal(2, {{2, 2}});
  EXPECT_EQ(associated_primes(sq), (std::vector<VarMask>{0b01, 0b10}));
  EXPECT_EQ(colon_by_monomial(sq, mono({1, 2})), MonomialIdeal::from_masks(2, {0b01}));
  EXPECT_EQ(colon_by_monomial(sq, mono({2, 1})), MonomialIdeal::from_masks(2, {0b10}));
  // Embedded prime: (x0^2, x0 x1) = (x0) ∩ (x0^2, x1).
  EXPECT_EQ(associated_primes(ideal(2, {{2, 0}, {1, 1}})), (std::vector<VarMask>{0b01, 0b11}));
}

TEST(AssociatedPrimes, MatchColonScanOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const MonomialIdeal i = random_ideal(rng, 3);
    if (!i.is_proper()) continue;
    std::set<VarMask> brute;
    std::vector<Exponent> a(3, 0);
    const auto d = exponent_bound(i);
    while (true) {
      const MonomialIdeal c = colon_by_monomial(i, mono(a));
      bool prime = !c.is_unit();
      VarMask p = 0;
      if (prime) {
        for (const Monomial& g : c.generators()) {
          prime = prime && g.degree() == 1;
          p |= support(g);
        }
      }
      if (prime && !c.generators().empty()) brute.insert(p);
      int k = 0;
      while (k < 3 && a[k] == d[k]) a[k++] = 0;
      if (k == 3) break;
      ++a[k];
    }
    std::vector<VarMask> got = associated_primes(i);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, std::vector<VarMask>(brute.begin(), brute.end())) << i.to_string();
  }
}

TEST(Unmixed, Examples) {
  const MonomialIdeal xy = MonomialIdeal::from_masks(2, {0b11});
  EXPECT_TRUE(is_unmixed(xy));
  EXPECT_EQ(krull_dim(xy), 1);
  EXPECT_FALSE(is_unmixed(edge_ideal(path_graph(3))));
  const MonomialIdeal s = edge_ideal(suspension_of_cycle(4));
  EXPECT_TRUE(is_unmixed(s));
  EXPECT_EQ(krull_dim(s), 4);
  const MonomialIdeal embedded = ideal(2, {{2, 0}, {1, 1}});
  EXPECT_FALSE(is_unmixed(embedded));
  EXPECT_TRUE(is_unmixed_radical(embedded));
  EXPECT_EQ(krull_dim(MonomialIdeal::unit(3)), -1);
}

TEST(Unmixed, MinimalPrimesAreMinimalCovers) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.num_edges() == 0) continue;
      std::vector<VarMask> mp = minimal_primes(edge_ideal(g));
      std::sort(mp.begin(), mp.end());
      EXPECT_EQ(mp, minimal_vertex_covers(g));
      EXPECT_EQ(is_unmixed(edge_ideal(g)), is_unmixed_radical(edge_ideal(g)));
    }
  }
}

TEST(Polarize, Examples) {
  const MonomialIdeal p3 = MonomialIdeal::from_masks(3, {0b011, 0b110});
  const Polarization a = polarize(p3);
  EXPECT_EQ(a.ideal, p3);
  ASSERT_EQ(a.variables.size(), 3u);
  EXPECT_EQ(a.variables[2].variable, 2);
  EXPECT_EQ(a.variables[2].slot, 1);

  const Polarization b = polarize(ideal(1, {{2}}));
  EXPECT_EQ(b.ideal, MonomialIdeal::from_masks(2, {0b11}));

  const Polarization c = polarize(ideal(2, {{2, 2}}));
  EXPECT_EQ(c.ideal, MonomialIdeal::from_masks(4, {0b1111}));
  EXPECT_EQ(c.variables[1].variable, 0);
  EXPECT_EQ(c.variables[1].slot, 2);
  EXPECT_EQ(c.variables[2].variable, 1);
  EXPECT_EQ(c.variables[2].slot, 1);
}

TEST(Polarize, PreservesHeightAndDimensionDrop) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const MonomialIdeal i = random_ideal(rng, 3);
    if (!i.is_proper()) continue;
    const Polarization p = polarize(i);
    ASSERT_TRUE(p.ideal.is_squarefree());
    EXPECT_EQ(p.ideal.num_vars() - krull_dim(p.ideal), i.num_vars() - krull_dim(i));
    EXPECT_EQ(is_unmixed(p.ideal), is_unmixed(i));
  }
}
