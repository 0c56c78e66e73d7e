#include "clusterkit/typea.hpp"

#include <algorithm>
#include <list>

#include "clusterkit/errors.hpp"

namespace clusterkit {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::pair<int, int> sorted_pair(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = sorted_pair(x.first, x.second);
  auto [c, d] = sorted_pair(y.first, y.second);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b) != (a < d && d < b);
}

/// Number of polygon vertices strictly on the side of chord {c,d} that contains v.
int side_size(int m, std::pair<int, int> chord, int v) {
  auto [c, d] = chord;
  const int from_c = mod(v - c, m), arc = mod(d - c, m);
  if (from_c > 0 && from_c < arc) return arc - 1;
  return m - arc - 1;
}

void check_interval(int n, int i, int j) {
  if (i < 1 || j > n || i > j)
    throw IndexError("interval " + std::to_string(i) + ".." + std::to_string(j) + " outside 1.." + std::to_string(n));
}

/// Orientation of t_k induced by the counterclockwise triangle beyond it.
std::pair<int, int> positive_orientation(const Triangulation& t, const OrientedDiagonal& g, std::size_t k) {
  const auto tk = t.diagonals[g.crossings[k] - 1];
  for (const auto& tri : t.triangles()) {
    auto has = [&](int v) { return std::find(tri.begin(), tri.end(), v) != tri.end(); };
    if (!has(tk.first) || !has(tk.second)) continue;
    bool beyond;
    if (k + 1 < g.crossings.size()) {
      const auto next = t.diagonals[g.crossings[k + 1] - 1];
      beyond = has(next.first) && has(next.second);
    } else {
      beyond = has(g.to);
    }
    if (!beyond) continue;
    for (int s = 0; s < 3; ++s) {
      const int u = tri[s], w = tri[(s + 1) % 3];
      if (sorted_pair(u, w) == sorted_pair(tk.first, tk.second)) return {u, w};
    }
  }
  throw InvariantViolation("no triangle beyond a crossed diagonal");
}

}  // namespace

bool Triangulation::is_boundary(int a, int b) const {
  const int m = vertices();
  return mod(a - b, m) == 1 || mod(b - a, m) == 1;
}

int Triangulation::diagonal_label(int a, int b) const {
  const auto e = sorted_pair(a, b);
  for (std::size_t l = 0; l < diagonals.size(); ++l)
    if (diagonals[l] == e) return static_cast<int>(l) + 1;
  return 0;
}

std::string Triangulation::edge_name(int a, int b) const {
  if (const int l = diagonal_label(a, b)) return std::to_string(l);
  const int m = vertices();
  if (mod(b - a, m) == 1) return "B" + std::to_string(mod(a, m) + 1);
  if (mod(a - b, m) == 1) return "B" + std::to_string(mod(b, m) + 1);
  throw InvariantViolation("not an edge of the triangulation");
}

std::vector<std::vector<int>> Triangulation::triangles() const {
  std::vector<std::vector<int>> out;
  const int m = vertices();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!is_edge(a, b)) continue;
      for (int c = b + 1; c < m; ++c)
        if (is_edge(b, c) && is_edge(a, c)) out.push_back({a, b, c});
    }
  return out;
}

Triangulation triangulation_of_coxeter(const Word& c, int n, int start) {
  if (!is_coxeter_word(c, n)) throw IndexError("not a Coxeter word of A" + std::to_string(n));
  const int m = n + 3;
  std::vector<int> where(n + 1);
  for (int k = 0; k < n; ++k) where[c[k]] = k;
  std::list<int> ring;
  for (int v = 0; v < m; ++v) ring.push_back(mod(start + v, m));
  auto prev = [&](std::list<int>::iterator it) { return it == ring.begin() ? std::prev(ring.end()) : std::prev(it); };
  auto next = [&](std::list<int>::iterator it) { return std::next(it) == ring.end() ? ring.begin() : std::next(it); };

  Triangulation t;
  t.n = n;
  auto cut = ring.begin();
  for (int i = 1; i <= n; ++i) {
    const auto before = prev(cut), after = next(cut);
    t.diagonals.push_back(sorted_pair(*before, *after));
    t.distinguished.push_back(*cut);
    ring.erase(cut);
    if (i < n) cut = where[i + 1] < where[i] ? before : after;
  }
  return t;
}

OrientedDiagonal diagonal_of_root(const Triangulation& t, int i, int j) {
  check_interval(t.n, i, j);
  const int m = t.vertices();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (t.is_edge(a, b)) continue;
      std::vector<int> crossed;
      for (int l = 1; l <= t.n; ++l)
        if (chords_cross({a, b}, t.diagonals[l - 1])) crossed.push_back(l);
      if (crossed.size() != static_cast<std::size_t>(j - i + 1) || crossed.front() != i || crossed.back() != j) continue;
      std::stable_sort(crossed.begin(), crossed.end(), [&](int x, int y) {
        return side_size(m, t.diagonals[x - 1], a) < side_size(m, t.diagonals[y - 1], a);
      });
      OrientedDiagonal g{a, b, crossed};
      if (crossed.front() != i) {
        std::reverse(g.crossings.begin(), g.crossings.end());
        std::swap(g.from, g.to);
      }
      for (std::size_t k = 0; k < g.crossings.size(); ++k)
        if (g.crossings[k] != i + static_cast<int>(k)) throw InvariantViolation("diagonals crossed out of order");
      return g;
    }
  throw InvariantViolation("no diagonal crosses the requested interval");
}

std::optional<TPath> tpath_from_signs(const Triangulation& t, const OrientedDiagonal& g,
                                      const std::vector<int>& signs) {
  const std::size_t d = g.crossings.size();
  if (signs.size() != d) throw IndexError("one sign per crossed diagonal expected");
  TPath z{signs, {g.from}, g.crossings};
  for (std::size_t k = 0; k < d; ++k) {
    auto [u, w] = positive_orientation(t, g, k);
    if (signs[k] < 0) std::swap(u, w);
    z.vertices.push_back(u);
    z.vertices.push_back(w);
  }
  z.vertices.push_back(g.to);
  for (std::size_t s = 0; s + 1 < z.vertices.size(); s += 2)
    if (z.vertices[s] == z.vertices[s + 1] || !t.is_edge(z.vertices[s], z.vertices[s + 1])) return std::nullopt;
  return z;
}

std::vector<TPath> enumerate_tpaths(const Triangulation& t, const OrientedDiagonal& g) {
  const std::size_t d = g.crossings.size();
  if (d > 20) throw IndexError("too many crossed diagonals to enumerate sign sequences");
  std::vector<TPath> out;
  for (unsigned long mask = (1UL << d); mask-- > 0;) {
    std::vector<int> signs(d);
    for (std::size_t k = 0; k < d; ++k) signs[k] = (mask >> (d - 1 - k)) & 1 ? 1 : -1;
    if (auto z = tpath_from_signs(t, g, signs)) out.push_back(std::move(*z));
  }
  return out;
}

std::optional<TPath> flip_tpath(const Triangulation& t, const OrientedDiagonal& g, const TPath& z, int k) {
  if (k < 1 || k > static_cast<int>(z.signs.size())) throw IndexError("no crossed diagonal " + std::to_string(k));
  std::vector<int> signs = z.signs;
  signs[k - 1] = -signs[k - 1];
  return tpath_from_signs(t, g, signs);
}

TPath tpath_of_prefix(const Triangulation& t, const OrientedDiagonal& g, const Word& prefix) {
  auto z = tpath_from_signs(t, g, std::vector<int>(g.crossings.size(), -1));
  if (!z) throw InvariantViolation("antigreedy T-path missing");
  for (auto it = prefix.letters.begin(); it != prefix.letters.end(); ++it) {
    const auto at = std::find(g.crossings.begin(), g.crossings.end(), *it);
    if (at == g.crossings.end()) throw InvariantViolation("prefix letter not crossed by the diagonal");
    const int k = static_cast<int>(at - g.crossings.begin()) + 1;
    if (z->signs[k - 1] > 0) throw InvariantViolation("prefix letter flipped twice");
    z = flip_tpath(t, g, *z, k);
    if (!z) throw InvariantViolation("prefix flip leaves the set of T-paths");
  }
  return *z;
}

std::string to_string(const Triangulation& t, const TPath& z) {
  std::string out;
  for (std::size_t s = 1; s < z.vertices.size(); ++s) {
    if (!out.empty()) out += ' ';
    out += t.edge_name(z.vertices[s - 1], z.vertices[s]);
    if (s % 2 == 0) out += z.signs[s / 2 - 1] > 0 ? '+' : '-';
  }
  return out;
}

Exponent monomial_of_tpath(const TPath& z, int n) {
  Exponent e(n, 0);
  for (std::size_t k = 0; k < z.signs.size(); ++k)
    if (z.signs[k] > 0) e[z.crossings[k] - 1] += 1;
  return e;
}

FPolynomial f_poly_via_tpaths(const Triangulation& t, int i, int j) {
  const OrientedDiagonal g = diagonal_of_root(t, i, j);
  FPolynomial f(t.n);
  for (const TPath& z : enumerate_tpaths(t, g)) f.add_term(monomial_of_tpath(z, t.n), 1);
  return f;
}

FPolynomial f_poly_via_prefixes(const Word& c, int i, int j) {
  const int n = static_cast<int>(c.size());
  check_interval(n, i, j);
  FPolynomial f(n);
  for (const Word& p : restricted_prefixes(cartan_of_type('A', n), c, i, j)) {
    Exponent e(n, 0);
    for (int l : p.letters) e[l - 1] += 1;
    f.add_term(e, 1);
  }
  return f;
}

std::vector<std::vector<Point>> loday_summands(const Word& c) {
  const int n = static_cast<int>(c.size());
  const CartanMatrix a = cartan_of_type('A', n);
  std::vector<std::vector<Point>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<Point> pts;
      for (const Word& p : restricted_prefixes(a, c, i, j)) {
        Point e(n, 0);
        for (int l : p.letters) e[l - 1] = 1;
        pts.push_back(std::move(e));
      }
      std::sort(pts.begin(), pts.end());
      out.push_back(std::move(pts));
    }
  return out;
}

LatticePolytope loday_polytope(const Word& c) {
  std::optional<LatticePolytope> sum;
  for (const auto& pts : loday_summands(c)) {
    const LatticePolytope p = hull(pts);
    sum = sum ? minkowski_sum(*sum, p) : p;
  }
  return *sum;
}

}  // namespace clusterkit
