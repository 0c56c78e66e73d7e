#include <gtest/gtest.h>

#include <set>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/errors.hpp"
#include "oracles.hpp"

using namespace clusterkit;

namespace {

Word w(std::vector<int> letters) { return Word{std::move(letters)}; }

// Lexicographically first position set in c^copies spelling a reduced word
// for target, by exhaustive search.
std::vector<int> brute_first_sorting_positions(const RootSystem& rs, const Word& c,
                                               const GroupElement& target, int copies) {
  Word big;
  for (int r = 0; r < copies; ++r) big.letters.insert(big.letters.end(), c.letters.begin(), c.letters.end());
  const int len = length(rs, target);
  std::vector<int> best;
  const std::size_t total = std::size_t{1} << big.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (__builtin_popcountll(mask) != len) continue;
    std::vector<int> pos;
    Word sub;
    for (std::size_t p = 0; p < big.size(); ++p)
      if (mask >> p & 1U) {
        pos.push_back(static_cast<int>(p));
        sub.letters.push_back(big[p]);
      }
    if (element_of_word(rs, sub) != target) continue;
    if (best.empty() || pos < best) best = pos;
  }
  return best;
}

}  // namespace

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(parse_word("1,3,2"), w({1, 3, 2}));
  EXPECT_EQ(parse_word(" 1 , 2 "), w({1, 2}));
  EXPECT_EQ(parse_word(""), w({}));
  EXPECT_EQ(to_string(w({4, 1})), "4,1");
  EXPECT_THROW(parse_word("1,,2"), ParseError);
  EXPECT_THROW(parse_word("1;2"), ParseError);
  EXPECT_THROW(parse_word("a"), ParseError);
}

TEST(Word, CoxeterWordValidation) {
  EXPECT_TRUE(is_coxeter_word(w({2, 1, 3}), 3));
  EXPECT_FALSE(is_coxeter_word(w({2, 2, 3}), 3));
  EXPECT_FALSE(is_coxeter_word(w({1, 2}), 3));
  EXPECT_THROW(check_word(w({0}), 2), IndexError);
}

TEST(ElementOfWord, Basics) {
  const RootSystem rs(cartan_of_type("A2"));
  EXPECT_EQ(element_of_word(rs, w({})), GroupElement::identity(2));
  const GroupElement s1 = element_of_word(rs, w({1}));
  EXPECT_EQ(s1.apply(RootVec{1, 0}), (RootVec{-1, 0}));
  EXPECT_EQ(s1.apply(RootVec{0, 1}), (RootVec{1, 1}));
  EXPECT_EQ(element_of_word(rs, w({1, 2, 1})), element_of_word(rs, w({2, 1, 2})));
  EXPECT_THROW(element_of_word(rs, w({3})), IndexError);
}

TEST(ElementOfWord, BraidRelationsFromCoxeterMatrix) {
  for (const std::string t : {"B2", "G2", "A3"}) {
    const RootSystem rs(cartan_of_type(t));
    for (int s = 1; s <= rs.rank(); ++s)
      for (int u = s + 1; u <= rs.rank(); ++u) {
        const Int prod = rs.cartan()(s - 1, u - 1) * rs.cartan()(u - 1, s - 1);
        const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        Word a, b;
        for (int r = 0; r < m; ++r) {
          a.letters.push_back(r % 2 ? u : s);
          b.letters.push_back(r % 2 ? s : u);
        }
        EXPECT_EQ(element_of_word(rs, a), element_of_word(rs, b)) << t;
      }
  }
}

TEST(Length, MatchesCayleyDistanceForEveryElement) {
  for (const std::string t : {"A2", "A3", "B2", "B3", "G2"}) {
    const RootSystem rs(cartan_of_type(t));
    for (const auto& [g, d] : oracle::cayley_lengths(rs)) EXPECT_EQ(length(rs, g), d) << t;
  }
}

TEST(Length, SimpleCases) {
  const RootSystem rs(cartan_of_type("B3"));
  EXPECT_EQ(length(rs, GroupElement::identity(3)), 0);
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(length(rs, simple_reflection(rs, s)), 1);
}

TEST(LongestElement, IsUniqueMaximizer) {
  for (const std::string t : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
    const RootSystem rs(cartan_of_type(t));
    const GroupElement w0 = longest_element(rs);
    int max_len = -1, count = 0;
    GroupElement argmax = GroupElement::identity(rs.rank());
    for (const auto& [g, d] : oracle::cayley_lengths(rs)) {
      if (d > max_len) {
        max_len = d;
        count = 1;
        argmax = g;
      } else if (d == max_len) {
        ++count;
      }
    }
    EXPECT_EQ(count, 1);
    EXPECT_EQ(w0, argmax) << t;
    EXPECT_EQ(length(rs, w0), max_len);
  }
}

TEST(LongestElement, A1AndB2) {
  const RootSystem a1(cartan_of_type("A1"));
  EXPECT_EQ(longest_element(a1), simple_reflection(a1, 1));
  const RootSystem b2(cartan_of_type("B2"));
  EXPECT_EQ(length(b2, longest_element(b2)), 4);
}

TEST(SortingWord, A2AndIdentity) {
  const RootSystem rs(cartan_of_type("A2"));
  EXPECT_EQ(c_sorting_word(rs, w({1, 2}), longest_element(rs)), w({1, 2, 1}));
  EXPECT_EQ(c_sorting_word(rs, w({1, 2}), GroupElement::identity(2)), w({}));
  EXPECT_THROW(c_sorting_word(rs, w({1, 1}), GroupElement::identity(2)), IndexError);
}

TEST(SortingWord, A3StartsWithC) {
  const RootSystem rs(cartan_of_type("A3"));
  const Word sw = c_sorting_word(rs, w({1, 3, 2}), longest_element(rs));
  ASSERT_EQ(sw.size(), 6U);
  EXPECT_EQ(std::vector<int>(sw.letters.begin(), sw.letters.begin() + 3), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(length(rs, element_of_word(rs, sw)), 6);
}

TEST(SortingWord, ReducedForEveryElement) {
  for (const std::string t : {"A3", "B3", "G2"}) {
    const RootSystem rs(cartan_of_type(t));
    for (const Word& c : coxeter_elements(rs.cartan()))
      for (const auto& [g, d] : oracle::cayley_lengths(rs)) {
        const Word sw = c_sorting_word(rs, c, g);
        EXPECT_EQ(static_cast<int>(sw.size()), d);
        EXPECT_EQ(element_of_word(rs, sw), g);
      }
  }
}

TEST(SortingWord, LexicographicallyFirstPositionSet) {
  for (const std::string t : {"A2", "B2", "G2"}) {
    const RootSystem rs(cartan_of_type(t));
    for (const Word& c : coxeter_elements(rs.cartan()))
      for (const auto& [g, d] : oracle::cayley_lengths(rs)) {
        const auto best = brute_first_sorting_positions(rs, c, g, d + 1);
        Word first;
        for (int p : best) first.letters.push_back(c[p % c.size()]);
        EXPECT_EQ(c_sorting_word(rs, c, g), first) << t << " c=" << to_string(c);
      }
  }
}

TEST(CommutationNormalForm, IdempotentAndClassInvariant) {
  const CartanMatrix a = cartan_of_type("A4");
  const Word x = w({3, 1, 4, 2});
  const Word nf = commutation_normal_form(a, x);
  EXPECT_EQ(commutation_normal_form(a, nf), nf);
  // 3,1 and 4,2 commute
  EXPECT_EQ(commutation_normal_form(a, w({1, 3, 4, 2})), nf);
  EXPECT_EQ(commutation_normal_form(a, w({3, 1, 2, 4})), nf);
  EXPECT_EQ(nf, w({1, 3, 2, 4}));
  EXPECT_NE(commutation_normal_form(a, w({3, 4, 1, 2})), commutation_normal_form(a, w({3, 2, 1, 4})));
}

TEST(RestrictedPrefixes, A3Examples) {
  const CartanMatrix a = cartan_of_type("A3");
  EXPECT_EQ(restricted_prefixes(a, w({1, 3, 2}), 1, 3),
            (std::vector<Word>{w({}), w({1}), w({3}), w({1, 3}), w({1, 3, 2})}));
  EXPECT_EQ(restricted_prefixes(a, w({1, 3, 2}), 1, 2), (std::vector<Word>{w({}), w({1}), w({1, 2})}));
  for (int i = 1; i <= 3; ++i)
    EXPECT_EQ(restricted_prefixes(a, w({1, 3, 2}), i, i), (std::vector<Word>{w({}), w({i})}));
  EXPECT_THROW(restricted_prefixes(a, w({1, 3, 2}), 2, 1), IndexError);
}

TEST(RestrictedPrefixes, CountMatchesOrderIdealsOfInducedSubposet) {
  for (const std::string t : {"A4", "D4", "E6"}) {
    const CartanMatrix a = cartan_of_type(t);
    const int n = a.rank();
    for (const Word& c : coxeter_elements(a)) {
      // Transitive closure of the orientation s -> t (s before t in c, adjacent).
      std::vector<int> pos(n + 1);
      for (int p = 0; p < n; ++p) pos[c[p]] = p;
      std::vector<std::vector<bool>> less(n + 1, std::vector<bool>(n + 1, false));
      for (int s = 1; s <= n; ++s)
        for (int u = 1; u <= n; ++u)
          if (s != u && !a.commute(s, u) && pos[s] < pos[u]) less[s][u] = true;
      for (int k = 1; k <= n; ++k)
        for (int s = 1; s <= n; ++s)
          for (int u = 1; u <= n; ++u)
            if (less[s][k] && less[k][u]) less[s][u] = true;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          const int k = j - i + 1;
          int ideals = 0;
          for (int mask = 0; mask < (1 << k); ++mask) {
            bool ok = true;
            for (int s = i; s <= j && ok; ++s)
              for (int u = i; u <= j && ok; ++u)
                if ((mask >> (u - i) & 1) && !(mask >> (s - i) & 1) && less[s][u]) ok = false;
            ideals += ok;
          }
          EXPECT_EQ(static_cast<int>(restricted_prefixes(a, c, i, j).size()), ideals)
              << t << " c=" << to_string(c) << " [" << i << "," << j << "]";
        }
    }
  }
}

TEST(CoxeterElements, CountIsTwoToTheEdges) {
  EXPECT_EQ(coxeter_elements(cartan_of_type("A1")).size(), 1U);
  EXPECT_EQ(coxeter_elements(cartan_of_type("A4")).size(), 8U);
  EXPECT_EQ(coxeter_elements(cartan_of_type("D4")).size(), 8U);
  EXPECT_EQ(coxeter_elements(cartan_of_type("E6")).size(), 32U);
  const CartanMatrix a = cartan_of_type("B3");
  std::set<GroupElement> elements;
  const RootSystem rs(a);
  for (const Word& c : coxeter_elements(a)) {
    EXPECT_TRUE(is_coxeter_word(c, 3));
    elements.insert(element_of_word(rs, c));
  }
  EXPECT_EQ(elements.size(), 4U);
}
