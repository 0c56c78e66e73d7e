#pragma once

#include <string>
#include <vector>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/rootsys.hpp"

namespace clusterkit {

/// Sorted set of 1-based positions in the word Q.
struct Facet {
  std::vector<int> positions;

  std::size_t size() const { return positions.size(); }
  bool contains(int k) const;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

std::string to_string(const Facet& f);

/// Root, weight, coroot and coweight functions of one facet, indexed by
/// position k at slot k-1.
struct RootTable {
  std::vector<RootVec> roots;
  std::vector<WeightVec> weights;
  std::vector<CorootVec> coroots;
  std::vector<CoweightVec> coweights;

  friend bool operator==(const RootTable&, const RootTable&) = default;
};

struct FlipResult {
  Facet facet;
  int entered = 0;  // the position j that replaced i
};

/// The subword complex of Q = c w0(c). Immutable after construction.
class Complex {
public:
  Complex(CartanMatrix cartan, Word c);

  const RootSystem& root_system() const { return rs_; }
  const CartanMatrix& cartan() const { return rs_.cartan(); }
  int rank() const { return rs_.rank(); }
  const Word& coxeter() const { return c_; }
  const Word& word() const { return q_; }
  /// m = n + N.
  int size() const { return static_cast<int>(q_.size()); }
  int letter(int k) const { return q_[k - 1]; }
  const GroupElement& longest() const { return w0_; }

  /// Almost positive root attached to position k.
  const RootVec& pos_root(int k) const { return pos_root_.at(k - 1); }
  /// Inverse of pos_root; throws IndexError for vectors that are not almost positive roots.
  int position_of_root(const RootVec& beta) const;

  /// {1..n}; every flip out of it is increasing.
  Facet greedy_facet() const;
  /// Lexicographically last facet; every flip out of it is decreasing. This is
  /// {m-n+1..m} only when the first N letters of Q are reduced.
  Facet antigreedy_facet() const;
  /// Complement multiplies to w0 (reducedness follows from the length count).
  bool is_facet(const Facet& f) const;

  RootVec root_function(const Facet& f, int k) const;
  WeightVec weight_function(const Facet& f, int k) const;
  CorootVec coroot_function(const Facet& f, int k) const;
  CoweightVec coweight_function(const Facet& f, int k) const;
  /// All four functions at every position, by the direct product formula.
  RootTable root_table(const Facet& f) const;

  FlipResult flip(const Facet& f, int i) const;
  FlipResult flip(const Facet& f, int i, const RootTable& table) const;
  /// Table of flip(f,i) obtained from the table of f by the reflection update.
  RootTable update_after_flip(const Facet& f, int i, const FlipResult& flipped,
                              const RootTable& table) const;

  WeightVec brick_vector(const Facet& f) const;

private:
  void check_facet(const Facet& f) const;
  void check_position(int k) const;

  RootSystem rs_;
  Word c_;
  Word q_;
  GroupElement w0_;
  std::vector<RootVec> pos_root_;
  Facet antigreedy_;
};

WeightVec brick_vector(const RootTable& table);

/// Every facet with its root table, sorted by facet.
struct FacetEnumeration {
  std::vector<Facet> facets;
  std::vector<RootTable> tables;

  /// Index of f in facets, or -1.
  long index_of(const Facet& f) const;
};

/// Breadth-first closure under flips from the greedy facet. Tables are
/// propagated by the flip update and spot-checked against the direct formula
/// (every 20th discovered facet plus greedy and antigreedy).
FacetEnumeration enumerate_facets_with_tables(const Complex& k, unsigned jobs = 1);
std::vector<Facet> enumerate_facets(const Complex& k, unsigned jobs = 1);

/// Every n-subset whose complement multiplies to w0.
std::vector<Facet> brute_force_facets(const Complex& k);

}  // namespace clusterkit
