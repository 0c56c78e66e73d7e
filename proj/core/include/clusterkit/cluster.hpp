#pragma once

// Cluster algebras with principal coefficients, computed exactly.
//
// A cluster variable is a Laurent polynomial in x_1..x_n whose coefficients
// are polynomials in y_1..y_n. Slots and x/y indices are 1-based in the
// public API and coincide with the simple-root labels.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/fpoly.hpp"
#include "clusterkit/rootsys.hpp"

namespace clusterkit {

class Complex;

/// Laurent polynomial in x_1..x_n, y_1..y_n. Exponents are stored as one
/// vector of length 2n, x-part first.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(int rank) : n_(rank) {}
  static MPoly constant(int rank, const BigInt& c);
  static MPoly monomial(int rank, const Exponent& e, const BigInt& c = 1);
  static MPoly x(int rank, int i);
  static MPoly y(int rank, int i);

  int rank() const { return n_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& e, const BigInt& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly pow(unsigned k) const;
  /// Multiplies by the monomial with exponent e.
  MPoly shifted(const Exponent& e) const;

  /// this / d, which must be an exact Laurent polynomial quotient; throws
  /// InvariantViolation otherwise.
  MPoly divide_exact(const MPoly& d) const;

  friend bool operator==(const MPoly&, const MPoly&) = default;
  friend auto operator<=>(const MPoly& a, const MPoly& b) { return a.terms_ <=> b.terms_; }

private:
  int n_ = 0;
  std::map<Exponent, BigInt> terms_;
};

/// "(x1*y1*y2 + x2 + y1)/(x1*x2)".
std::string to_string(const MPoly& u);

struct Seed {
  /// 2n x n: principal block in rows 0..n-1, extended block below.
  std::vector<std::vector<Int>> matrix;
  std::vector<MPoly> vars;
  /// y-exponent vectors of the frozen variables.
  std::vector<Exponent> frozen;
  /// Position in Q of the variable in each slot; -1 when not yet assigned.
  std::vector<int> col_index;

  int rank() const { return static_cast<int>(vars.size()); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// The principal exchange matrix of the initial seed: b(s,t) = -a(s,t) if s
/// precedes t in c, a(s,t) if t precedes s, 0 on the diagonal.
std::vector<std::vector<Int>> coxeter_exchange_matrix(const CartanMatrix& cartan, const Word& c);

Seed initial_seed(const CartanMatrix& cartan, const Word& c);
/// Mutation in direction `slot` (1-based). The new variable's position is left
/// unassigned; see assign_positions.
Seed mutate(const Seed& s, int slot);

/// Componentwise minimum.
Exponent tropical_add(const Exponent& a, const Exponent& b);

FPolynomial f_polynomial(const MPoly& u);
RootVec d_vector(const MPoly& u);
/// Exponent of u(x, 0); throws InvariantViolation if that is not a single monomial.
WeightVec g_vector(const MPoly& u);
/// Columns of the extended block, in slot order.
std::vector<RootVec> c_vectors(const Seed& s);

/// x^g F(y_hat) with y_hat_i = y_i prod_j x_j^{B_c[j][i]}.
MPoly variable_from_g_and_F(const WeightVec& g, const FPolynomial& F, const CartanMatrix& cartan,
                            const Word& c);
/// max(F(x_hat)) - beta with x_hat_i = prod_j x_j^{-B_c[j][i]}. The maximum is
/// taken over all monomials and separately over the Newton polytope vertices;
/// a disagreement throws InvariantViolation.
WeightVec g_from_F(const FPolynomial& F, const RootVec& beta, const CartanMatrix& cartan, const Word& c);

/// Sorted canonical forms of the cluster variables; identifies a seed.
std::vector<MPoly> seed_key(const Seed& s);

/// Fills col_index from the d-vectors through the position/root bijection.
void assign_positions(Seed& s, const Complex& k);

/// All seeds reachable by mutation, each with positions assigned, sorted by
/// the set of positions (matching the facet order of enumerate_facets).
std::vector<Seed> enumerate_seeds(const CartanMatrix& cartan, const Word& c, unsigned jobs = 1);

/// Sorted positions of a seed's variables.
std::vector<int> seed_positions(const Seed& s);

}  // namespace clusterkit
