#pragma once

// Checks that run the subword complex and the cluster algebra side by side.
// A failing check never throws; it returns a Report with a counterexample.

#include <optional>
#include <string>
#include <vector>

#include "clusterkit/cluster.hpp"
#include "clusterkit/subword.hpp"

namespace clusterkit {

struct Counterexample {
  Facet facet;
  int position = 0;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Report {
  std::string check;
  std::string type;
  std::string coxeter;
  bool pass = true;
  /// Set when the check did not apply (e.g. the type-A models on B3).
  bool skipped = false;
  std::optional<Counterexample> counterexample;
  std::string detail;
  double millis = 0;
};

/// Facets and seeds matched by flipping and mutating in lockstep from the
/// greedy facet and the initial seed. seeds[i] belongs to facets.facets[i]
/// and its col_index holds the position of every slot.
struct Correspondence {
  Complex complex;
  FacetEnumeration facets;
  std::vector<Seed> seeds;

  /// Slot of position p in seed i; -1 if p is not in the facet.
  int slot_of(std::size_t i, int p) const;
  /// The cluster variable attached to the positive root beta.
  const MPoly& variable_of_root(const RootVec& beta) const;
};

/// Throws InvariantViolation if flips and mutations ever disagree, i.e. the
/// mutated variable's denominator vector is not the root of the entered
/// position or a revisited facet carries a different cluster.
Correspondence build_correspondence(const CartanMatrix& cartan, const Word& c, unsigned jobs = 1);

Report check_correspondence(const CartanMatrix& cartan, const Word& c, unsigned jobs = 1);
Report check_c_vectors(const Correspondence& k, unsigned jobs = 1);
Report check_g_vectors(const Correspondence& k, unsigned jobs = 1);
Report check_exchange_matrix(const Correspondence& k, unsigned jobs = 1);
Report check_newton_conjecture(const Correspondence& k, unsigned jobs = 1);
Report check_lattice_points(const Correspondence& k, unsigned jobs = 1);
Report check_lemmas(const Correspondence& k, unsigned jobs = 1);
Report check_minkowski_brick(const Correspondence& k, unsigned jobs = 1);
/// Every Coxeter element of A_n: mutation, T-path and prefix F-polynomials
/// agree, and at every position the realised weights fill the interval
/// between the greedy and antigreedy weight.
Report check_typea_models(int n, unsigned jobs = 1);

/// Names accepted by run_checks, in run order.
const std::vector<std::string>& check_names();

/// Runs the named checks ("all" expands to every name). The Minkowski check
/// is skipped when the Newton check ran and failed; "typea" is skipped unless
/// the matrix is of type A. Unknown names throw ParseError.
std::vector<Report> run_checks(const CartanMatrix& cartan, const Word& c, const std::vector<std::string>& checks,
                               unsigned jobs = 1);

/// "(1,0,-1)".
template <class Tag>
std::string to_string(const CoordVec<Tag>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace clusterkit
