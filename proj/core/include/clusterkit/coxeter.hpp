#pragma once

#include <compare>
#include <string>
#include <vector>

#include "clusterkit/rootsys.hpp"

namespace clusterkit {

/// A word in the simple reflections; letters are 1-based.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Parses "1,3,2" (whitespace tolerated). Throws ParseError.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

/// Throws IndexError unless every letter is in 1..n.
void check_word(const Word& w, int n);
/// True iff w contains each of 1..n exactly once.
bool is_coxeter_word(const Word& w, int n);

/// Element of W as its integer matrix on simple-root coordinates
/// (column t is the image of alpha_t).
class GroupElement {
public:
  static GroupElement identity(int n);
  explicit GroupElement(std::vector<std::vector<Int>> mat) : mat_(std::move(mat)) {}

  int rank() const { return static_cast<int>(mat_.size()); }
  const std::vector<std::vector<Int>>& matrix() const { return mat_; }
  RootVec apply(const RootVec& v) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
  std::vector<std::vector<Int>> mat_;
};

GroupElement simple_reflection(const RootSystem& rs, int s);
/// Product of the simple reflections of w, in word order.
GroupElement element_of_word(const RootSystem& rs, const Word& w);
/// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const GroupElement& g);
GroupElement longest_element(const RootSystem& rs);
bool is_left_descent(const RootSystem& rs, const GroupElement& g, int s);

/// Lexicographically first reduced subword of c^infinity for target (greedy scan).
Word c_sorting_word(const RootSystem& rs, const Word& c, const GroupElement& target);

/// Lexicographically smallest word in the commutation class of w.
Word commutation_normal_form(const CartanMatrix& cartan, const Word& w);

/// Prefixes of c with every letter outside i..j deleted, in commutation normal
/// form, sorted by length and then lexicographically. Includes the empty word.
std::vector<Word> restricted_prefixes(const CartanMatrix& cartan, const Word& c, int i, int j);

/// One word per Coxeter element (= acyclic orientation of the Dynkin diagram),
/// each in commutation normal form, sorted.
std::vector<Word> coxeter_elements(const CartanMatrix& cartan);

}  // namespace clusterkit
