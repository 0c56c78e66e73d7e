#include "clusterkit/fpoly.hpp"

#include <algorithm>

#include "clusterkit/errors.hpp"
#include "format.hpp"

namespace clusterkit {

FPolynomial FPolynomial::one(std::size_t nvars) {
  FPolynomial f(nvars);
  f.add_term(Exponent(nvars, 0), 1);
  return f;
}

void FPolynomial::add_term(const Exponent& e, const BigInt& coeff) {
  if (e.size() != n_) throw IndexError("F-polynomial exponent of wrong length");
  for (Int x : e)
    if (x < 0) throw InvariantViolation("F-polynomial exponents must be nonnegative");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt FPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Point> FPolynomial::exponents() const {
  std::vector<Point> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

FPolynomial operator+(const FPolynomial& a, const FPolynomial& b) {
  if (a.n_ != b.n_) throw IndexError("F-polynomials in different numbers of variables");
  FPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

FPolynomial operator*(const FPolynomial& a, const FPolynomial& b) {
  if (a.n_ != b.n_) throw IndexError("F-polynomials in different numbers of variables");
  FPolynomial out(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const FPolynomial& f) {
  std::vector<std::pair<Exponent, BigInt>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return detail::display_order(a.first, b.first); });
  return detail::format_polynomial(terms, detail::variable_names('y', f.nvars()));
}

bool has_dividing_top_monomial(const FPolynomial& f, const RootVec& beta) {
  if (f.is_zero() || beta.size() != f.nvars()) return false;
  Int top = -1;
  int at_top = 0;
  for (const auto& [e, c] : f.terms()) {
    Int d = 0;
    for (Int x : e) d += x;
    if (d > top) {
      top = d;
      at_top = 1;
    } else if (d == top) {
      ++at_top;
    }
  }
  if (at_top != 1 || !f.terms().count(beta.coords())) return false;
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > beta[i]) return false;
  return true;
}

}  // namespace clusterkit
