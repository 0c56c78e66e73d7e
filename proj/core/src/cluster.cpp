#include "clusterkit/cluster.hpp"

#include <algorithm>
#include <set>

#include "clusterkit/errors.hpp"
#include "clusterkit/parallel.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/subword.hpp"
#include "format.hpp"

namespace clusterkit {

namespace {

Exponent min_exponent(const MPoly& p) {
  Exponent m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent negated(Exponent e) {
  for (Int& x : e) x = -x;
  return e;
}

void check_slot(int slot, int n) {
  if (slot < 1 || slot > n) throw IndexError("slot " + std::to_string(slot) + " out of range 1.." + std::to_string(n));
}

/// y^f as a 2n-exponent.
MPoly y_monomial(int n, const Exponent& f) {
  Exponent e(2 * n, 0);
  for (int i = 0; i < n; ++i) e[n + i] = f[i];
  return MPoly::monomial(n, e);
}

}  // namespace

MPoly MPoly::constant(int rank, const BigInt& c) { return monomial(rank, Exponent(2 * rank, 0), c); }

MPoly MPoly::monomial(int rank, const Exponent& e, const BigInt& c) {
  MPoly p(rank);
  p.add_term(e, c);
  return p;
}

MPoly MPoly::x(int rank, int i) {
  check_slot(i, rank);
  Exponent e(2 * rank, 0);
  e[i - 1] = 1;
  return monomial(rank, e);
}

MPoly MPoly::y(int rank, int i) {
  check_slot(i, rank);
  Exponent e(2 * rank, 0);
  e[rank + i - 1] = 1;
  return monomial(rank, e);
}

void MPoly::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != 2 * n_) throw IndexError("Laurent exponent of wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.n_);
  Exponent e(2 * a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly out = constant(n_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MPoly MPoly::shifted(const Exponent& s) const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw InvariantViolation("division by the zero Laurent polynomial");
  if (is_zero()) return MPoly(n_);
  // Clearing the smallest exponent of each side leaves polynomials with no
  // monomial factor; an exact Laurent quotient then is a polynomial quotient.
  const Exponent mn = min_exponent(*this);
  const Exponent md = min_exponent(d);
  MPoly rem = shifted(negated(mn));
  const MPoly den = d.shifted(negated(md));
  const auto& [lead_e, lead_c] = *den.terms_.rbegin();
  MPoly quot(n_);
  Exponent qe(2 * n_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) throw InvariantViolation("Laurent division is not exact");
    }
    if (rc % lead_c != 0) throw InvariantViolation("Laurent division is not exact");
    const BigInt qc = rc / lead_c;
    quot.add_term(qe, qc);
    rem -= monomial(n_, qe, qc) * den;
  }
  Exponent s(2 * n_);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = mn[i] - md[i];
  return quot.shifted(s);
}

std::string to_string(const MPoly& u) {
  if (u.is_zero()) return "0";
  const int n = u.rank();
  std::vector<std::string> names = detail::variable_names('x', n);
  for (const auto& y : detail::variable_names('y', n)) names.push_back(y);
  Exponent shift(2 * n, 0);
  for (const auto& [e, c] : u.terms())
    for (std::size_t i = 0; i < e.size(); ++i) shift[i] = std::min(shift[i], e[i]);
  std::vector<std::pair<Exponent, BigInt>> num;
  const MPoly top_poly = u.shifted(negated(shift));
  for (const auto& [e, c] : top_poly.terms()) num.emplace_back(e, c);
  std::sort(num.begin(), num.end(), [](const auto& a, const auto& b) { return detail::display_order(a.first, b.first); });
  std::string top = detail::format_polynomial(num, names);
  const Exponent den = negated(shift);
  if (std::all_of(den.begin(), den.end(), [](Int x) { return x == 0; })) return top;
  if (num.size() > 1) top = "(" + top + ")";
  int factors = 0;
  for (Int x : den) factors += x != 0;
  std::string bottom = detail::format_monomial(den, names);
  if (factors > 1) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

std::vector<std::vector<Int>> coxeter_exchange_matrix(const CartanMatrix& cartan, const Word& c) {
  const int n = cartan.rank();
  if (!is_coxeter_word(c, n)) throw IndexError("not a Coxeter word for rank " + std::to_string(n));
  std::vector<int> where(n);
  for (int k = 0; k < n; ++k) where[c[k] - 1] = k;
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) b[s][t] = where[s] < where[t] ? -cartan(s, t) : cartan(s, t);
  return b;
}

Seed initial_seed(const CartanMatrix& cartan, const Word& c) {
  const int n = cartan.rank();
  Seed s;
  s.matrix = coxeter_exchange_matrix(cartan, c);
  for (int i = 0; i < n; ++i) {
    std::vector<Int> row(n, 0);
    row[i] = 1;
    s.matrix.push_back(std::move(row));
    s.vars.push_back(MPoly::x(n, i + 1));
    Exponent f(n, 0);
    f[i] = 1;
    s.frozen.push_back(std::move(f));
  }
  s.col_index.assign(n, 0);
  // x_s has denominator vector -alpha_s, which sits where s occurs in c.
  for (int k = 0; k < n; ++k) s.col_index[c[k] - 1] = k + 1;
  return s;
}

Seed mutate(const Seed& s, int slot) {
  const int n = s.rank();
  check_slot(slot, n);
  const int k = slot - 1;
  const auto& b = s.matrix;
  Seed out;
  out.matrix = b;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        out.matrix[i][j] = -b[i][j];
      else if (b[i][k] > 0 && b[k][j] > 0)
        out.matrix[i][j] = b[i][j] + b[i][k] * b[k][j];
      else if (b[i][k] < 0 && b[k][j] < 0)
        out.matrix[i][j] = b[i][j] - b[i][k] * b[k][j];
    }

  const Exponent& f = s.frozen[k];
  const Exponent f_plus_one = tropical_add(f, Exponent(n, 0));
  MPoly pos = y_monomial(n, f);
  MPoly neg = MPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    if (b[i][k] > 0) pos = pos * s.vars[i].pow(static_cast<unsigned>(b[i][k]));
    if (b[i][k] < 0) neg = neg * s.vars[i].pow(static_cast<unsigned>(-b[i][k]));
  }
  out.vars = s.vars;
  out.vars[k] = (pos + neg).divide_exact(y_monomial(n, f_plus_one) * s.vars[k]);

  out.frozen = s.frozen;
  out.frozen[k] = negated(f);
  for (int l = 0; l < n; ++l) {
    if (l == k) continue;
    const Int bkl = b[k][l];
    for (int r = 0; r < n; ++r) out.frozen[l][r] += std::max<Int>(bkl, 0) * f[r] - bkl * f_plus_one[r];
  }
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r)
      if (out.frozen[l][r] != out.matrix[n + r][l])
        throw InvariantViolation("frozen variables disagree with the extended exchange matrix");

  out.col_index = s.col_index;
  out.col_index[k] = -1;
  return out;
}

Exponent tropical_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw IndexError("tropical sum of vectors of different length");
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

FPolynomial f_polynomial(const MPoly& u) {
  const int n = u.rank();
  FPolynomial f(n);
  for (const auto& [e, c] : u.terms()) f.add_term(Exponent(e.begin() + n, e.end()), c);
  return f;
}

RootVec d_vector(const MPoly& u) {
  if (u.is_zero()) throw InvariantViolation("denominator vector of zero");
  const int n = u.rank();
  const Exponent m = min_exponent(u);
  RootVec d(n);
  for (int i = 0; i < n; ++i) d[i] = -m[i];
  return d;
}

WeightVec g_vector(const MPoly& u) {
  const int n = u.rank();
  const Exponent* found = nullptr;
  for (const auto& [e, c] : u.terms()) {
    if (std::any_of(e.begin() + n, e.end(), [](Int x) { return x != 0; })) continue;
    if (found) throw InvariantViolation("u(x,0) is not a monomial");
    found = &e;
  }
  if (!found) throw InvariantViolation("u(x,0) vanishes");
  return WeightVec(std::vector<Int>(found->begin(), found->begin() + n));
}

std::vector<RootVec> c_vectors(const Seed& s) {
  const int n = s.rank();
  std::vector<RootVec> out;
  for (int j = 0; j < n; ++j) {
    RootVec v(n);
    for (int r = 0; r < n; ++r) v[r] = s.matrix[n + r][j];
    out.push_back(std::move(v));
  }
  return out;
}

MPoly variable_from_g_and_F(const WeightVec& g, const FPolynomial& F, const CartanMatrix& cartan, const Word& c) {
  const int n = cartan.rank();
  const auto bc = coxeter_exchange_matrix(cartan, c);
  MPoly u(n);
  Exponent e(2 * n);
  for (const auto& [lambda, coeff] : F.terms()) {
    for (int j = 0; j < n; ++j) {
      e[j] = g[j];
      for (int i = 0; i < n; ++i) e[j] += bc[j][i] * lambda[i];
      e[n + j] = lambda[j];
    }
    u.add_term(e, coeff);
  }
  return u;
}

WeightVec g_from_F(const FPolynomial& F, const RootVec& beta, const CartanMatrix& cartan, const Word& c) {
  const int n = cartan.rank();
  const auto bc = coxeter_exchange_matrix(cartan, c);
  auto max_over = [&](const std::vector<Point>& lambdas) {
    std::vector<Int> best;
    for (const Point& lambda : lambdas) {
      std::vector<Int> v(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) v[j] -= bc[j][i] * lambda[i];
      if (best.empty())
        best = v;
      else
        for (int j = 0; j < n; ++j) best[j] = std::max(best[j], v[j]);
    }
    if (best.empty()) best.assign(n, 0);
    return best;
  };
  const std::vector<Point> all = F.exponents();
  const std::vector<Int> full = max_over(all);
  if (!all.empty() && max_over(hull(all).vertices()) != full)
    throw InvariantViolation("g-vector maximum not attained on Newton polytope vertices");
  WeightVec g(n);
  for (int j = 0; j < n; ++j) g[j] = full[j] - beta[j];
  return g;
}

std::vector<MPoly> seed_key(const Seed& s) {
  std::vector<MPoly> key = s.vars;
  std::sort(key.begin(), key.end());
  return key;
}

void assign_positions(Seed& s, const Complex& k) {
  for (int slot = 0; slot < s.rank(); ++slot) s.col_index[slot] = k.position_of_root(d_vector(s.vars[slot]));
}

std::vector<int> seed_positions(const Seed& s) {
  std::vector<int> p = s.col_index;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Seed> enumerate_seeds(const CartanMatrix& cartan, const Word& c, unsigned jobs) {
  const Complex k(cartan, c);
  const int n = cartan.rank();
  std::vector<Seed> seeds{initial_seed(cartan, c)};
  std::set<std::vector<MPoly>> seen{seed_key(seeds.front())};
  std::size_t level_begin = 0;
  while (level_begin < seeds.size()) {
    const std::size_t level_end = seeds.size();
    const std::size_t width = level_end - level_begin;
    std::vector<std::vector<Seed>> next(width);
    parallel_for(width, jobs, [&](std::size_t i) {
      for (int slot = 1; slot <= n; ++slot) next[i].push_back(mutate(seeds[level_begin + i], slot));
    });
    for (auto& batch : next)
      for (Seed& s : batch)
        if (seen.insert(seed_key(s)).second) seeds.push_back(std::move(s));
    level_begin = level_end;
  }
  parallel_for(seeds.size(), jobs, [&](std::size_t i) { assign_positions(seeds[i], k); });
  std::sort(seeds.begin(), seeds.end(),
            [](const Seed& a, const Seed& b) { return seed_positions(a) < seed_positions(b); });
  return seeds;
}

}  // namespace clusterkit
