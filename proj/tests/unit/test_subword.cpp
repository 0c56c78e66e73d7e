#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "clusterkit/errors.hpp"
#include "clusterkit/subword.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using namespace clusterkit;

namespace {

Word w(std::vector<int> letters) { return Word{std::move(letters)}; }
Facet f(std::vector<int> p) { return Facet{std::move(p)}; }

// Sum of g_i (1^i, 0^(n+1-i)), shifted so the minimum entry is 0.
std::vector<long> ambient(const WeightVec& g) {
  const std::size_t n = g.size();
  std::vector<long> v(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p <= i; ++p) v[p] += g[i];
  const long lo = *std::min_element(v.begin(), v.end());
  for (auto& x : v) x -= lo;
  return v;
}

struct Case {
  std::string type;
  Word c;
};

std::vector<Case> all_small_cases() {
  std::vector<Case> out;
  for (const std::string t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"})
    for (const Word& c : coxeter_elements(cartan_of_type(t))) out.push_back({t, c});
  out.push_back({"F4", w({1, 2, 3, 4})});
  return out;
}

}  // namespace

TEST(Complex, A2WordAndRoots) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  EXPECT_EQ(k.word(), w({1, 2, 1, 2, 1}));
  EXPECT_EQ(k.size(), 5);
  const std::vector<RootVec> expected = {{-1, 0}, {0, -1}, {1, 0}, {1, 1}, {0, 1}};
  for (int p = 1; p <= 5; ++p) EXPECT_EQ(k.pos_root(p), expected[p - 1]);
  EXPECT_EQ(k.position_of_root(RootVec{1, 1}), 4);
  EXPECT_THROW(k.position_of_root(RootVec{1, -1}), IndexError);
}

TEST(Complex, A1) {
  const Complex k(cartan_of_type("A1"), w({1}));
  EXPECT_EQ(k.word(), w({1, 1}));
  EXPECT_EQ(k.pos_root(1), (RootVec{-1}));
  EXPECT_EQ(k.pos_root(2), (RootVec{1}));
  EXPECT_EQ(enumerate_facets(k), (std::vector<Facet>{f({1}), f({2})}));
  EXPECT_EQ(k.greedy_facet(), f({1}));
  EXPECT_EQ(k.antigreedy_facet(), f({2}));
}

TEST(Complex, A3PositionRoots) {
  const Complex k(cartan_of_type("A3"), w({1, 3, 2}));
  EXPECT_EQ(k.size(), 9);
  const std::vector<RootVec> expected = {{1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 1, 0}, {0, 1, 0}};
  for (int p = 4; p <= 9; ++p) EXPECT_EQ(k.pos_root(p), expected[p - 4]);
  EXPECT_EQ(k.greedy_facet(), f({1, 2, 3}));
  EXPECT_EQ(k.antigreedy_facet(), f({7, 8, 9}));
}

TEST(Complex, NegativeSimplesFollowTheCoxeterWord) {
  const Complex k(cartan_of_type("A3"), w({2, 1, 3}));
  EXPECT_EQ(k.pos_root(1), (RootVec{0, -1, 0}));
  EXPECT_EQ(k.pos_root(2), (RootVec{-1, 0, 0}));
  EXPECT_EQ(k.pos_root(3), (RootVec{0, 0, -1}));
}

TEST(Complex, RejectsNonCoxeterWord) {
  EXPECT_THROW(Complex(cartan_of_type("A2"), w({1, 1})), IndexError);
  EXPECT_THROW(Complex(cartan_of_type("A2"), w({1})), IndexError);
}

TEST(Complex, PositionRootsBijectOntoPositiveRoots) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    const auto& pos = k.root_system().positive_roots();
    std::set<RootVec> seen;
    for (int p = k.rank() + 1; p <= k.size(); ++p) seen.insert(k.pos_root(p));
    EXPECT_EQ(seen, std::set<RootVec>(pos.begin(), pos.end())) << t;
    EXPECT_EQ(k.size(), k.rank() + static_cast<int>(pos.size()));
  }
}

TEST(RootFunction, A2Configurations) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  const Facet i = f({3, 4});
  EXPECT_EQ(k.root_function(i, 3), (RootVec{0, 1}));
  EXPECT_EQ(k.root_function(i, 4), (RootVec{-1, -1}));
  EXPECT_EQ(k.weight_function(i, 3), (WeightVec{-1, 1}));
  EXPECT_EQ(k.weight_function(i, 4), (WeightVec{-1, 0}));
}

TEST(RootFunction, GreedyFirstPositionsAreSimpleRoots) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    for (int p = 1; p <= k.rank(); ++p)
      EXPECT_EQ(k.root_function(k.greedy_facet(), p), k.root_system().simple_root(c[p - 1]));
  }
}

TEST(RootFunction, GreedyGivesThePositionRoots) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    for (int p = k.rank() + 1; p <= k.size(); ++p)
      EXPECT_EQ(k.root_function(k.greedy_facet(), p), k.pos_root(p));
  }
}

TEST(Antigreedy, IsLexicographicallyLastFacet) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    const auto facets = enumerate_facets(k);
    EXPECT_EQ(k.antigreedy_facet(), facets.back()) << t << " c=" << to_string(c);
    EXPECT_EQ(k.greedy_facet(), facets.front());
  }
}

TEST(Antigreedy, NotAlwaysTheLastPositions) {
  const Complex k(cartan_of_type("A3"), w({1, 2, 3}));
  EXPECT_FALSE(k.is_facet(f({7, 8, 9})));
  EXPECT_TRUE(k.is_facet(k.antigreedy_facet()));
}

TEST(Flip, A2Examples) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  FlipResult r = k.flip(f({1, 2}), 1);
  EXPECT_EQ(r.facet, f({2, 3}));
  EXPECT_EQ(r.entered, 3);
  r = k.flip(f({3, 4}), 3);
  EXPECT_EQ(r.facet, f({4, 5}));
  EXPECT_EQ(r.entered, 5);
  r = k.flip(f({3, 4}), 4);
  EXPECT_EQ(r.facet, f({2, 3}));
  EXPECT_EQ(r.entered, 2);
  EXPECT_THROW(k.flip(f({3, 4}), 1), IndexError);
}

TEST(Flip, AdjacencyMatchesBruteForce) {
  // Two facets are adjacent iff they share n-1 positions.
  for (const std::string t : {"A2", "B2", "A3"}) {
    const Complex k(cartan_of_type(t), coxeter_elements(cartan_of_type(t)).front());
    const auto facets = brute_force_facets(k);
    for (const Facet& a : facets)
      for (int i : a.positions) {
        std::vector<Facet> partners;
        for (const Facet& b : facets) {
          std::vector<int> common;
          std::set_intersection(a.positions.begin(), a.positions.end(), b.positions.begin(),
                                b.positions.end(), std::back_inserter(common));
          if (static_cast<int>(common.size()) == k.rank() - 1 && !b.contains(i)) partners.push_back(b);
        }
        ASSERT_EQ(partners.size(), 1U);
        EXPECT_EQ(k.flip(a, i).facet, partners.front());
      }
  }
}

TEST(Flip, InvolutionAndDirection) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    const auto e = enumerate_facets_with_tables(k);
    for (std::size_t idx = 0; idx < e.facets.size(); ++idx) {
      const Facet& a = e.facets[idx];
      const RootTable& table = e.tables[idx];
      for (int i : a.positions) {
        const FlipResult r = k.flip(a, i, table);
        const FlipResult back = k.flip(r.facet, r.entered);
        EXPECT_EQ(back.facet, a);
        EXPECT_EQ(back.entered, i);
        const RootVec& ri = table.roots[i - 1];
        const RootVec& rj = table.roots[r.entered - 1];
        EXPECT_EQ(i < r.entered, rj == ri && k.root_system().is_positive_root(ri)) << t;
        if (a == k.greedy_facet()) EXPECT_LT(i, r.entered);
        if (a == k.antigreedy_facet()) EXPECT_GT(i, r.entered);
      }
    }
  }
}

TEST(UpdateAfterFlip, A2RowOfFacet23) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  const Facet g = f({1, 2});
  const RootTable t = k.root_table(g);
  const FlipResult r = k.flip(g, 1, t);
  const RootTable u = k.update_after_flip(g, 1, r, t);
  EXPECT_EQ(u.weights, (std::vector<WeightVec>{{1, 0}, {0, 1}, {-1, 1}, {0, 1}, {-1, 1}}));
  EXPECT_EQ(u.weights[0], t.weights[0]);
}

TEST(UpdateAfterFlip, EqualsDirectFormulaEverywhere) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    for (const Facet& a : enumerate_facets(k)) {
      const RootTable table = k.root_table(a);
      for (int i : a.positions) {
        const FlipResult r = k.flip(a, i, table);
        EXPECT_EQ(k.update_after_flip(a, i, r, table), k.root_table(r.facet)) << t << to_string(a);
      }
    }
  }
}

TEST(RootTable, CorootsAndCoweightsAreConsistent) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    const RootSystem& rs = k.root_system();
    const auto e = enumerate_facets_with_tables(k);
    for (const RootTable& table : e.tables)
      for (int p = 0; p < k.size(); ++p) {
        EXPECT_EQ(table.coroots[p], rs.coroot_of(table.roots[p]));
        EXPECT_EQ(rs.pair(table.weights[p], table.coroots[p]), 1);
      }
  }
}

TEST(Brick, A2Vectors) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  EXPECT_EQ(k.brick_vector(f({1, 2})), (WeightVec{1, 3}));
  EXPECT_EQ(k.brick_vector(f({4, 5})), (WeightVec{-1, 1}));
  EXPECT_EQ(ambient(k.brick_vector(f({1, 2}))), (std::vector<long>{4, 3, 0}));
  std::set<RootVec> diffs;
  const WeightVec bag = k.brick_vector(k.antigreedy_facet());
  for (const Facet& a : enumerate_facets(k))
    diffs.insert(k.root_system().weight_diff_to_root_coords(k.brick_vector(a), bag));
  EXPECT_EQ(diffs, (std::set<RootVec>{{2, 2}, {1, 2}, {0, 1}, {0, 0}, {2, 0}}));
}

TEST(Enumerate, A2Facets) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  EXPECT_EQ(enumerate_facets(k),
            (std::vector<Facet>{f({1, 2}), f({1, 5}), f({2, 3}), f({3, 4}), f({4, 5})}));
}

TEST(Enumerate, A3WeightTableMatchesGolden) {
  const Complex k(cartan_of_type("A3"), w({1, 3, 2}));
  const auto e = enumerate_facets_with_tables(k);
  ASSERT_EQ(e.facets.size(), 14U);
  for (const auto& row : golden::a3_132_weights()) {
    const long idx = e.index_of(f(row.facet));
    ASSERT_GE(idx, 0) << "missing facet";
    for (int p = 4; p <= 9; ++p) EXPECT_EQ(ambient(e.tables[idx].weights[p - 1]), row.weights[p - 4]);
  }
}

TEST(Enumerate, EqualsBruteForceAndCatalanNumber) {
  for (const auto& [t, c] : all_small_cases()) {
    if (t == "F4") continue;
    const Complex k(cartan_of_type(t), c);
    const auto facets = enumerate_facets(k);
    EXPECT_EQ(facets, brute_force_facets(k)) << t << " c=" << to_string(c);
    EXPECT_EQ(static_cast<long>(facets.size()), oracle::w_catalan(t[0], t[1] - '0')) << t;
    for (const Facet& a : facets) EXPECT_TRUE(k.is_facet(a));
  }
}

TEST(Enumerate, F4CountIsCatalan) {
  const Complex k(cartan_of_type("F4"), w({1, 2, 3, 4}));
  EXPECT_EQ(static_cast<long>(enumerate_facets(k).size()), oracle::w_catalan('F', 4));
}

TEST(Enumerate, IndependentOfWorkerCount) {
  const Complex k(cartan_of_type("D4"), w({2, 1, 3, 4}));
  const auto one = enumerate_facets_with_tables(k, 1);
  const auto four = enumerate_facets_with_tables(k, 4);
  EXPECT_EQ(one.facets, four.facets);
  EXPECT_EQ(one.tables, four.tables);
}

TEST(Enumerate, ComplementRootsArePositiveRoots) {
  for (const auto& [t, c] : all_small_cases()) {
    const Complex k(cartan_of_type(t), c);
    const auto& pos = k.root_system().positive_roots();
    const std::multiset<RootVec> expected(pos.begin(), pos.end());
    const auto e = enumerate_facets_with_tables(k);
    for (std::size_t idx = 0; idx < e.facets.size(); ++idx) {
      std::multiset<RootVec> got;
      for (int p = 1; p <= k.size(); ++p)
        if (!e.facets[idx].contains(p)) got.insert(e.tables[idx].roots[p - 1]);
      EXPECT_EQ(got, expected) << t << to_string(e.facets[idx]);
    }
  }
}

TEST(Facet, Validation) {
  const Complex k(cartan_of_type("A2"), w({1, 2}));
  EXPECT_FALSE(k.is_facet(f({1, 3})));
  EXPECT_FALSE(k.is_facet(f({2, 1})));
  EXPECT_FALSE(k.is_facet(f({1})));
  EXPECT_TRUE(k.is_facet(f({1, 5})));
  EXPECT_THROW(k.root_table(f({1, 9})), IndexError);
}
