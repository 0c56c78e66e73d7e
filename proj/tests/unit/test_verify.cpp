#include <gtest/gtest.h>

#include <set>

#include "clusterkit/errors.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/verify.hpp"
#include "oracles.hpp"

using namespace clusterkit;

namespace {

Word w(std::vector<int> letters) { return Word{std::move(letters)}; }

const Correspondence& a2() {
  static const Correspondence k = build_correspondence(cartan_of_type("A2"), w({1, 2}));
  return k;
}

std::size_t index_of(const Correspondence& k, std::vector<int> positions) {
  const long i = k.facets.index_of(Facet{std::move(positions)});
  EXPECT_GE(i, 0);
  return static_cast<std::size_t>(i);
}

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.pass) << r.check << " " << r.type << " c=" << r.coxeter << ": "
                      << (r.counterexample ? to_string(r.counterexample->facet) + " @" +
                                                 std::to_string(r.counterexample->position) + " expected " +
                                                 r.counterexample->expected + " got " + r.counterexample->actual
                                           : r.detail);
  EXPECT_FALSE(r.skipped) << r.check;
}

struct Run {
  std::string type;
  Word c;
};

void PrintTo(const Run& r, std::ostream* os) { *os << r.type << " c=" << to_string(r.c); }

std::vector<Run> full_runs() {
  std::vector<Run> out;
  for (const Word& c : coxeter_elements(cartan_of_type("G2"))) out.push_back({"G2", c});
  for (const Word& c : coxeter_elements(cartan_of_type("B2"))) out.push_back({"B2", c});
  out.push_back({"A3", w({1, 3, 2})});
  out.push_back({"B3", w({2, 1, 3})});
  out.push_back({"C3", w({3, 2, 1})});
  out.push_back({"D4", w({1, 2, 3, 4})});
  out.push_back({"D4", w({2, 1, 4, 3})});
  return out;
}

class FullRun : public ::testing::TestWithParam<Run> {};

}  // namespace

TEST(Correspondence, A2FacetsAndSeedsInLockstep) {
  const Correspondence& k = a2();
  ASSERT_EQ(k.seeds.size(), 5u);
  const std::vector<Facet> expected = {Facet{{1, 2}}, Facet{{1, 5}}, Facet{{2, 3}}, Facet{{3, 4}}, Facet{{4, 5}}};
  EXPECT_EQ(k.facets.facets, expected);
  for (std::size_t i = 0; i < k.seeds.size(); ++i)
    for (int p : k.facets.facets[i].positions) {
      const int slot = k.slot_of(i, p);
      ASSERT_GE(slot, 0);
      EXPECT_EQ(d_vector(k.seeds[i].vars[slot]), k.complex.pos_root(p));
    }
  EXPECT_EQ(k.slot_of(0, 3), -1);
}

TEST(Correspondence, VariableOfRoot) {
  EXPECT_EQ(to_string(a2().variable_of_root(RootVec{1, 1})), "(x1*y1*y2 + x2 + y1)/(x1*x2)");
  EXPECT_THROW(a2().variable_of_root(RootVec{2, 1}), IndexError);
}

TEST(Correspondence, CountsAreCatalanNumbers) {
  for (auto [family, n] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    const CartanMatrix a = cartan_of_type(family, n);
    const Correspondence k = build_correspondence(a, coxeter_elements(a).back(), 2);
    EXPECT_EQ(static_cast<long>(k.seeds.size()), oracle::w_catalan(family, n)) << family << n;
    std::set<std::vector<MPoly>> clusters;
    for (const Seed& s : k.seeds) clusters.insert(seed_key(s));
    EXPECT_EQ(clusters.size(), k.seeds.size());
  }
}

TEST(Correspondence, IndependentOfJobs) {
  const CartanMatrix b3 = cartan_of_type("B3");
  const Correspondence one = build_correspondence(b3, w({2, 1, 3}), 1);
  const Correspondence four = build_correspondence(b3, w({2, 1, 3}), 4);
  EXPECT_EQ(one.facets.facets, four.facets.facets);
  EXPECT_EQ(one.seeds, four.seeds);
}

TEST(CVectors, A2FacetThreeFour) {
  const Correspondence& k = a2();
  const std::size_t i = index_of(k, {3, 4});
  const auto cv = c_vectors(k.seeds[i]);
  EXPECT_EQ(cv[k.slot_of(i, 3)], (RootVec{0, 1}));
  EXPECT_EQ(cv[k.slot_of(i, 4)], (RootVec{-1, -1}));
  expect_pass(check_c_vectors(k));
}

TEST(CVectors, GreedyFacetIsTheIdentity) {
  const Correspondence& k = a2();
  const std::size_t i = index_of(k, {1, 2});
  const auto cv = c_vectors(k.seeds[i]);
  EXPECT_EQ(cv[k.slot_of(i, 1)], (RootVec{1, 0}));
  EXPECT_EQ(cv[k.slot_of(i, 2)], (RootVec{0, 1}));
}

TEST(GVectors, A2FacetThreeFour) {
  const Correspondence& k = a2();
  const std::size_t i = index_of(k, {3, 4});
  EXPECT_EQ(g_vector(k.seeds[i].vars[k.slot_of(i, 3)]), (WeightVec{-1, 1}));
  EXPECT_EQ(g_vector(k.seeds[i].vars[k.slot_of(i, 4)]), (WeightVec{-1, 0}));
  expect_pass(check_g_vectors(k));
}

TEST(GVectors, GreedyFacetGivesFundamentalWeights) {
  const Correspondence& k = a2();
  const std::size_t i = index_of(k, {1, 2});
  EXPECT_EQ(g_vector(k.seeds[i].vars[k.slot_of(i, 1)]), (WeightVec{1, 0}));
  EXPECT_EQ(g_vector(k.seeds[i].vars[k.slot_of(i, 2)]), (WeightVec{0, 1}));
}

TEST(ExchangeMatrix, A2GreedyFacet) {
  const Correspondence& k = a2();
  const Seed& s = k.seeds[index_of(k, {1, 2})];
  const std::vector<std::vector<Int>> principal(s.matrix.begin(), s.matrix.begin() + 2);
  EXPECT_EQ(principal, (std::vector<std::vector<Int>>{{0, 1}, {-1, 0}}));
  expect_pass(check_exchange_matrix(k));
}

TEST(ExchangeMatrix, DiagonalIsZero) {
  for (const Seed& s : a2().seeds)
    for (int i = 0; i < s.rank(); ++i) EXPECT_EQ(s.matrix[i][i], 0);
}

TEST(Newton, A2WeightColumnOfTheLongRoot) {
  const Correspondence& k = a2();
  const int pos = k.complex.position_of_root(RootVec{1, 1});
  EXPECT_EQ(pos, 4);
  const std::size_t ag = index_of(k, {4, 5});
  std::multiset<RootVec> column;
  for (const RootTable& t : k.facets.tables)
    column.insert(k.complex.root_system().weight_diff_to_root_coords(t.weights[pos - 1], k.facets.tables[ag].weights[pos - 1]));
  EXPECT_EQ(column, (std::multiset<RootVec>{{1, 1}, {1, 1}, {0, 0}, {0, 0}, {1, 0}}));
  EXPECT_EQ(hull(f_polynomial(k.variable_of_root(RootVec{1, 1})).exponents()).vertices(),
            (std::vector<Point>{{0, 0}, {1, 0}, {1, 1}}));
  expect_pass(check_newton_conjecture(k));
}

TEST(Newton, SimpleRootsGiveSegments) {
  const Correspondence k = build_correspondence(cartan_of_type("B3"), w({2, 1, 3}));
  for (int s = 1; s <= 3; ++s) {
    RootVec alpha(3);
    alpha[s - 1] = 1;
    Point e(3, 0);
    e[s - 1] = 1;
    EXPECT_EQ(hull(f_polynomial(k.variable_of_root(alpha)).exponents()).vertices(),
              (std::vector<Point>{Point(3, 0), e}));
  }
}

TEST(LatticePoints, A2EveryMonomialIsAVertex) {
  const Correspondence& k = a2();
  for (const RootVec& beta : k.complex.root_system().positive_roots()) {
    const FPolynomial f = f_polynomial(k.variable_of_root(beta));
    EXPECT_EQ(f.exponents().size(), hull(f.exponents()).vertices().size());
  }
  expect_pass(check_lattice_points(k));
}

TEST(LatticePoints, B3HasMonomialsThatAreNotVertices) {
  const Correspondence k = build_correspondence(cartan_of_type("B3"), w({2, 1, 3}));
  bool found = false;
  for (const RootVec& beta : k.complex.root_system().positive_roots()) {
    const FPolynomial f = f_polynomial(k.variable_of_root(beta));
    found = found || f.exponents().size() > hull(f.exponents()).vertices().size();
  }
  EXPECT_TRUE(found);
  expect_pass(check_lattice_points(k));
}

TEST(Lemmas, A2GreedyMinusAntigreedy) {
  const Correspondence& k = a2();
  const RootTable& g = k.facets.tables[index_of(k, {1, 2})];
  const RootTable& ag = k.facets.tables[index_of(k, {4, 5})];
  // Ambient A2 coordinates: the two weights are (1,1,0) and (0,1,1).
  EXPECT_EQ(oracle::ambient(g.weights[3]), (std::vector<long>{1, 1, 0}));
  EXPECT_EQ(oracle::ambient(ag.weights[3]), (std::vector<long>{0, 1, 1}));
  EXPECT_EQ(k.complex.root_system().weight_diff_to_root_coords(g.weights[3], ag.weights[3]), g.roots[3]);
  EXPECT_EQ(g.roots[3], (RootVec{1, 1}));
  expect_pass(check_lemmas(k));
}

TEST(Lemmas, SharedPositionsCarryEqualWeights) {
  const Correspondence& k = a2();
  for (std::size_t i = 0; i < k.facets.facets.size(); ++i)
    for (std::size_t j = 0; j < k.facets.facets.size(); ++j)
      for (int p : k.facets.facets[i].positions)
        if (k.facets.facets[j].contains(p)) EXPECT_EQ(k.facets.tables[i].weights[p - 1], k.facets.tables[j].weights[p - 1]);
}

TEST(Minkowski, A2BrickMinusAntigreedy) {
  const Correspondence& k = a2();
  const WeightVec b_ag = brick_vector(k.facets.tables[index_of(k, {4, 5})]);
  std::vector<Point> shifted;
  for (const RootTable& t : k.facets.tables)
    shifted.push_back(k.complex.root_system().weight_diff_to_root_coords(brick_vector(t), b_ag).coords());
  EXPECT_EQ(std::set<Point>(shifted.begin(), shifted.end()),
            (std::set<Point>{{2, 2}, {1, 2}, {0, 1}, {0, 0}, {2, 0}}));
  const Report r = check_minkowski_brick(k);
  expect_pass(r);
}

TEST(Minkowski, A1IsASegment) {
  const Correspondence k = build_correspondence(cartan_of_type("A1"), w({1}));
  expect_pass(check_minkowski_brick(k));
  EXPECT_EQ(hull(f_polynomial(k.variable_of_root(RootVec{1})).exponents()).vertices(),
            (std::vector<Point>{{0}, {1}}));
}

TEST(TypeAModels, SmallRanks) {
  for (int n = 1; n <= 3; ++n) expect_pass(check_typea_models(n, 2));
}

TEST(Reports, CounterexampleForATamperedSeed) {
  Correspondence k = a2();
  const std::size_t i = index_of(k, {3, 4});
  std::swap(k.seeds[i].col_index[0], k.seeds[i].col_index[1]);
  const Report c = check_c_vectors(k);
  ASSERT_FALSE(c.pass);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(c.counterexample->facet, (Facet{{3, 4}}));
  EXPECT_FALSE(check_g_vectors(k).pass);
  EXPECT_FALSE(check_exchange_matrix(k).pass);
}

TEST(Reports, DeterministicAcrossJobs) {
  Correspondence k = build_correspondence(cartan_of_type("B3"), w({2, 1, 3}));
  std::swap(k.seeds[7].col_index[0], k.seeds[7].col_index[2]);
  std::swap(k.seeds[3].col_index[1], k.seeds[3].col_index[2]);
  const Report one = check_c_vectors(k, 1), many = check_c_vectors(k, 4);
  ASSERT_TRUE(one.counterexample && many.counterexample);
  EXPECT_EQ(*one.counterexample, *many.counterexample);
  EXPECT_EQ(one.counterexample->facet, k.facets.facets[3]);
}

TEST(RunChecks, AllOnA1) {
  const auto reports = run_checks(cartan_of_type("A1"), w({1}), {"all"});
  EXPECT_EQ(reports.size(), check_names().size());
  for (const Report& r : reports) expect_pass(r);
}

TEST(RunChecks, TypeAOnlyForTypeA) {
  const auto reports = run_checks(cartan_of_type("B2"), w({1, 2}), {"typea", "c-vectors"});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check, "c-vectors");
  EXPECT_TRUE(reports[1].skipped);
}

TEST(RunChecks, RejectsUnknownNamesAndBadWords) {
  EXPECT_THROW(run_checks(cartan_of_type("A2"), w({1, 2}), {"newtonn"}), ParseError);
  EXPECT_THROW(run_checks(cartan_of_type("A2"), w({1, 1}), {"newton"}), Error);
}

TEST_P(FullRun, TheoremsAndConjecturesHold) {
  const CartanMatrix a = cartan_of_type(GetParam().type);
  const auto reports = run_checks(a, GetParam().c,
                                  {"correspondence", "c-vectors", "g-vectors", "exchange-matrix", "lemmas", "newton",
                                   "lattice", "minkowski"},
                                  2);
  EXPECT_EQ(reports.size(), 8u);
  for (const Report& r : reports) expect_pass(r);
}

INSTANTIATE_TEST_SUITE_P(Types, FullRun, ::testing::ValuesIn(full_runs()),
                         [](const auto& info) { return info.param.type + "_" + std::to_string(info.index); });
