#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "clusterkit/polytope.hpp"
#include "clusterkit/rootsys.hpp"

namespace clusterkit {

using BigInt = boost::multiprecision::mpz_int;
using Exponent = std::vector<Int>;

/// Polynomial in y_1..y_n with integer coefficients, kept without zero terms.
class FPolynomial {
public:
  FPolynomial() = default;
  explicit FPolynomial(std::size_t nvars) : n_(nvars) {}
  static FPolynomial one(std::size_t nvars);

  std::size_t nvars() const { return n_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const BigInt& coeff);
  BigInt coefficient(const Exponent& e) const;
  BigInt constant_term() const { return coefficient(Exponent(n_, 0)); }
  /// Exponent vectors of all monomials, sorted.
  std::vector<Point> exponents() const;

  friend FPolynomial operator+(const FPolynomial& a, const FPolynomial& b);
  friend FPolynomial operator*(const FPolynomial& a, const FPolynomial& b);
  friend bool operator==(const FPolynomial&, const FPolynomial&) = default;

private:
  std::size_t n_ = 0;
  std::map<Exponent, BigInt> terms_;
};

/// "y1*y2 + y1 + 1": terms by decreasing total degree, then decreasing lex.
std::string to_string(const FPolynomial& f);

/// Monomial of maximal total degree has exponent beta, is unique, and every
/// other monomial divides it.
bool has_dividing_top_monomial(const FPolynomial& f, const RootVec& beta);

}  // namespace clusterkit
