#include "clusterkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/gmp.hpp>

#include "clusterkit/errors.hpp"

namespace clusterkit {

namespace {

using Rational = boost::multiprecision::mpq_rational;

std::vector<Int> compute_symmetrizer(const std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t) {
        if (t == s || a[s][t] == 0) continue;
        // d_s a(s,t) = d_t a(t,s)
        const Rational want = d[s] * Rational(a[s][t]) / Rational(a[t][s]);
        if (d[t] == 0) {
          d[t] = want;
          stack.push_back(t);
        } else if (d[t] != want) {
          throw InvalidTypeError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  boost::multiprecision::mpz_int lcm = 1;
  for (const auto& x : d) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<Int> out(n);
  boost::multiprecision::mpz_int g = 0;
  std::vector<boost::multiprecision::mpz_int> scaled(n);
  for (int s = 0; s < n; ++s) {
    scaled[s] = numerator(d[s]) * (lcm / denominator(d[s]));
    g = boost::multiprecision::gcd(g, scaled[s]);
  }
  for (int s = 0; s < n; ++s) out[s] = static_cast<Int>(scaled[s] / g);
  return out;
}

// Sylvester's criterion on the symmetrised matrix d_s a(s,t).
bool positive_definite(const std::vector<std::vector<Int>>& a, const std::vector<Int>& d) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) m[s][t] = Rational(d[s] * a[s][t]);
  // Gaussian elimination without pivoting: all pivots positive iff all
  // leading principal minors positive.
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

std::string type_label(char family, int rank) {
  std::ostringstream os;
  os << family << rank;
  return os.str();
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<Int>> entries, std::string label)
    : a_(std::move(entries)), label_(std::move(label)) {
  const std::size_t n = a_.size();
  if (n == 0) throw InvalidTypeError("Cartan matrix must have positive rank");
  for (const auto& row : a_)
    if (row.size() != n) throw InvalidTypeError("Cartan matrix must be square");
  for (std::size_t s = 0; s < n; ++s) {
    if (a_[s][s] != 2) throw InvalidTypeError("Cartan matrix diagonal must be 2");
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (a_[s][t] > 0) throw InvalidTypeError("off-diagonal Cartan entries must be <= 0");
      if ((a_[s][t] == 0) != (a_[t][s] == 0))
        throw InvalidTypeError("Cartan matrix zero pattern must be symmetric");
      const Int prod = a_[s][t] * a_[t][s];
      if (prod > 3) throw InvalidTypeError("Cartan entry product exceeds 3 (not finite type)");
    }
  }
  d_ = compute_symmetrizer(a_);
  if (!positive_definite(a_, d_))
    throw InvalidTypeError("symmetrised Cartan matrix is not positive definite");
}

CartanMatrix CartanMatrix::transpose() const {
  const int n = rank();
  std::vector<std::vector<Int>> t(n, std::vector<Int>(n));
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < n; ++u) t[s][u] = a_[u][s];
  return CartanMatrix(std::move(t), label_.empty() ? std::string{} : label_ + "^v");
}

CartanMatrix cartan_of_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  const int n = rank;
  bool ok = false;
  switch (family) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) throw InvalidTypeError("no finite type " + type_label(family, rank));

  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (int s = 0; s < n; ++s) a[s][s] = 2;
  auto bond = [&](int s, int t) {  // 1-based simple bond
    a[s - 1][t - 1] = -1;
    a[t - 1][s - 1] = -1;
  };
  switch (family) {
    case 'A':
      for (int s = 1; s < n; ++s) bond(s, s + 1);
      break;
    case 'B':
      for (int s = 1; s < n; ++s) bond(s, s + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int s = 1; s < n; ++s) bond(s, s + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int s = 1; s < n - 1; ++s) bond(s, s + 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int s = 4; s < n; ++s) bond(s, s + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[2][1] = -2;
      break;
    case 'G':
      bond(1, 2);
      a[1][0] = -3;
      break;
  }
  return CartanMatrix(std::move(a), type_label(family, rank));
}

CartanMatrix cartan_of_type(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw ParseError("type must look like A3 or E6, got '" + label + "'");
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw ParseError("type must look like A3 or E6, got '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
    if (rank > 1000) throw InvalidTypeError("rank too large in '" + label + "'");
  }
  return cartan_of_type(label[0], rank);
}

std::vector<RootVec> positive_roots(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  auto reflect = [&](int s, RootVec v) {
    Int p = 0;
    for (int t = 0; t < n; ++t) p += cartan(s, t) * v[t];
    v[s] -= p;
    return v;
  };
  std::set<RootVec> all;
  std::vector<RootVec> frontier;
  for (int s = 0; s < n; ++s) {
    RootVec e(static_cast<std::size_t>(n));
    e[s] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  const int cap = 10 * n * n;
  int rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > cap)
      throw ClosureError("positive-root closure exceeded " + std::to_string(cap) + " rounds");
    std::vector<RootVec> next;
    for (const RootVec& r : frontier) {
      for (int s = 0; s < n; ++s) {
        RootVec v = reflect(s, r);
        if (v.is_nonpositive()) continue;  // only s(alpha_s) = -alpha_s lands here
        if (!v.is_nonnegative())
          throw ClosureError("reflection produced a vector that is not sign-coherent");
        if (all.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVec> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const RootVec& x, const RootVec& y) {
    const Int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return out;
}

RootSystem::RootSystem(CartanMatrix cartan)
    : cartan_(std::move(cartan)), positive_(clusterkit::positive_roots(cartan_)) {
  const int n = rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) m[s][t] = Rational(cartan_(s, t));
    m[s][n + s] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    std::swap(m[k], m[piv]);
    const Rational p = m[k][k];
    for (auto& x : m[k]) x /= p;
    for (int i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational f = m[i][k];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  boost::multiprecision::mpz_int den = 1;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) den = boost::multiprecision::lcm(den, denominator(m[s][n + t]));
  inv_den_ = static_cast<Int>(den);
  inv_num_.assign(n, std::vector<Int>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      inv_num_[s][t] = static_cast<Int>(numerator(m[s][n + t]) * (den / denominator(m[s][n + t])));
}

void RootSystem::check_letter(int s) const {
  if (s < 1 || s > rank())
    throw IndexError("letter " + std::to_string(s) + " out of range 1.." + std::to_string(rank()));
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return std::binary_search(positive_.begin(), positive_.end(), v,
                            [](const RootVec& x, const RootVec& y) {
                              const Int hx = height(x), hy = height(y);
                              if (hx != hy) return hx < hy;
                              return x > y;
                            });
}

bool RootSystem::is_root(const RootVec& v) const {
  return is_positive_root(v) || is_positive_root(-v);
}

RootVec RootSystem::simple_root(int s) const {
  check_letter(s);
  RootVec v(static_cast<std::size_t>(rank()));
  v[s - 1] = 1;
  return v;
}

CorootVec RootSystem::simple_coroot(int s) const {
  check_letter(s);
  CorootVec v(static_cast<std::size_t>(rank()));
  v[s - 1] = 1;
  return v;
}

WeightVec RootSystem::fundamental_weight(int s) const {
  check_letter(s);
  WeightVec v(static_cast<std::size_t>(rank()));
  v[s - 1] = 1;
  return v;
}

CoweightVec RootSystem::fundamental_coweight(int s) const {
  check_letter(s);
  CoweightVec v(static_cast<std::size_t>(rank()));
  v[s - 1] = 1;
  return v;
}

RootVec RootSystem::reflect(int s, const RootVec& v) const {
  check_letter(s);
  const int i = s - 1;
  Int p = 0;
  for (int t = 0; t < rank(); ++t) p += cartan_(i, t) * v[t];
  RootVec out = v;
  out[i] -= p;
  return out;
}

CorootVec RootSystem::reflect(int s, const CorootVec& v) const {
  check_letter(s);
  const int i = s - 1;
  Int p = 0;
  for (int t = 0; t < rank(); ++t) p += cartan_(t, i) * v[t];
  CorootVec out = v;
  out[i] -= p;
  return out;
}

WeightVec RootSystem::reflect(int s, const WeightVec& v) const {
  check_letter(s);
  const int i = s - 1;
  const Int k = v[i];
  WeightVec out = v;
  if (k == 0) return out;
  for (int t = 0; t < rank(); ++t) out[t] -= k * cartan_(t, i);
  return out;
}

CoweightVec RootSystem::reflect(int s, const CoweightVec& v) const {
  check_letter(s);
  const int i = s - 1;
  const Int k = v[i];
  CoweightVec out = v;
  if (k == 0) return out;
  for (int t = 0; t < rank(); ++t) out[t] -= k * cartan_(i, t);
  return out;
}

RootVec RootSystem::reflect_in(const RootVec& beta, const CorootVec& beta_vee,
                               const RootVec& v) const {
  return v - pair(v, beta_vee) * beta;
}

CorootVec RootSystem::reflect_in(const RootVec& beta, const CorootVec& beta_vee,
                                 const CorootVec& v) const {
  return v - pair(beta, v) * beta_vee;
}

WeightVec RootSystem::reflect_in(const RootVec& beta, const CorootVec& beta_vee,
                                 const WeightVec& v) const {
  return v - pair(v, beta_vee) * root_to_weight_coords(beta);
}

CoweightVec RootSystem::reflect_in(const RootVec& beta, const CorootVec& beta_vee,
                                   const CoweightVec& v) const {
  return v - pair(beta, v) * coroot_to_coweight_coords(beta_vee);
}

WeightVec RootSystem::root_to_weight_coords(const RootVec& v) const {
  const int n = rank();
  WeightVec w(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) w[t] += cartan_(t, s) * v[s];
  return w;
}

CoweightVec RootSystem::coroot_to_coweight_coords(const CorootVec& v) const {
  const int n = rank();
  CoweightVec w(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) w[t] += cartan_(s, t) * v[s];
  return w;
}

RootVec RootSystem::weight_diff_to_root_coords(const WeightVec& w1, const WeightVec& w2) const {
  const int n = rank();
  const WeightVec diff = w1 - w2;
  RootVec out(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    Int num = 0;
    for (int t = 0; t < n; ++t) num += inv_num_[s][t] * diff[t];
    if (num % inv_den_ != 0) throw LatticeError("weight difference is not in the root lattice");
    out[s] = num / inv_den_;
  }
  return out;
}

Int RootSystem::pair(const RootVec& x, const CorootVec& y) const {
  const int n = rank();
  Int p = 0;
  for (int s = 0; s < n; ++s) {
    if (y[s] == 0) continue;
    Int row = 0;
    for (int t = 0; t < n; ++t) row += cartan_(s, t) * x[t];
    p += y[s] * row;
  }
  return p;
}

Int RootSystem::pair(const WeightVec& w, const CorootVec& y) const {
  Int p = 0;
  for (int s = 0; s < rank(); ++s) p += w[s] * y[s];
  return p;
}

Int RootSystem::pair(const RootVec& x, const CoweightVec& z) const {
  Int p = 0;
  for (int s = 0; s < rank(); ++s) p += x[s] * z[s];
  return p;
}

CorootVec RootSystem::coroot_of(const RootVec& beta) const {
  const int n = rank();
  const auto& d = cartan_.symmetrizer();
  Int norm = 0;  // (beta, beta) with (alpha_s, alpha_t) = d_s a(s,t)
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) norm += beta[s] * beta[t] * d[s] * cartan_(s, t);
  if (norm <= 0) throw InvariantViolation("coroot of a non-root requested");
  CorootVec out(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const Int num = 2 * beta[s] * d[s];
    if (num % norm != 0) throw InvariantViolation("coroot is not integral; input is not a root");
    out[s] = num / norm;
  }
  return out;
}

}  // namespace clusterkit
