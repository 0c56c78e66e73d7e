#include "clusterkit/polytope.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

namespace clusterkit {

namespace {

using Rational = boost::multiprecision::mpq_rational;

void check_dims(const std::vector<Point>& pts, std::size_t dim) {
  for (const Point& p : pts)
    if (p.size() != dim) throw std::invalid_argument("points of mixed dimension");
}

}  // namespace

bool in_convex_hull(const std::vector<Point>& pts, const Point& p) {
  if (pts.empty()) return false;
  const std::size_t d = p.size();
  check_dims(pts, d);
  for (const Point& q : pts)
    if (q == p) return true;
  // Cheap rejection outside the bounding box.
  for (std::size_t i = 0; i < d; ++i) {
    Int lo = pts[0][i], hi = pts[0][i];
    for (const Point& q : pts) {
      lo = std::min(lo, q[i]);
      hi = std::max(hi, q[i]);
    }
    if (p[i] < lo || p[i] > hi) return false;
  }
  if (pts.size() == 1) return false;

  // Phase 1: minimise the sum of artificials for
  //   sum_j lambda_j q_j = p,  sum_j lambda_j = 1,  lambda >= 0.
  const std::size_t rows = d + 1;
  const std::size_t k = pts.size();
  const std::size_t cols = k + rows;  // lambdas, then artificials
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const Int rhs = r < d ? p[r] : 1;
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[r][j] = sign * (r < d ? pts[j][r] : 1);
    t[r][k + r] = 1;
    t[r][cols] = sign * rhs;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;
  // Reduced costs of the phase-1 objective.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= k && j < cols) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += t[r][j];
    cost[j] = -s;
  }

  while (true) {
    // Bland's rule: lowest-index improving column.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase 1
    const Rational piv = t[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[cols] holds minus the objective value.
  return cost[cols] == 0;
}

LatticePolytope LatticePolytope::hull(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const std::size_t dim = points.front().size();
  check_dims(points, dim);
  std::vector<Point> cand(points.begin(), points.end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.size() <= 2) return LatticePolytope(dim, std::move(cand));

  // A unique maximiser of a linear functional is a vertex. Coordinate
  // directions and a fixed pseudo-random set certify most vertices cheaply.
  std::vector<char> known(cand.size(), 0);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-97, 97);
  for (std::size_t trial = 0; trial < 2 * dim + 24; ++trial) {
    std::vector<Int> dir(dim, 0);
    if (trial < 2 * dim)
      dir[trial / 2] = trial % 2 ? -1 : 1;
    else
      for (Int& x : dir) x = coeff(rng);
    std::size_t best = 0;
    bool unique = true;
    Int best_val = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      Int v = 0;
      for (std::size_t j = 0; j < dim; ++j) v += dir[j] * cand[i][j];
      if (i == 0 || v > best_val) {
        best = i;
        best_val = v;
        unique = true;
      } else if (v == best_val) {
        unique = false;
      }
    }
    if (unique) known[best] = 1;
  }
  std::vector<Point> certified;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (known[i]) certified.push_back(cand[i]);

  // Every other point is either inside the hull of the certified vertices or
  // checked against all surviving points. Removing a non-extreme point never
  // changes the hull, so the survivors are exactly the vertices.
  std::vector<char> alive(cand.size(), 1);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (known[i]) continue;
    if (in_convex_hull(certified, cand[i])) {
      alive[i] = 0;
      continue;
    }
    std::vector<Point> others;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i && alive[j]) others.push_back(cand[j]);
    if (in_convex_hull(others, cand[i]))
      alive[i] = 0;
    else
      certified.push_back(cand[i]);
  }
  std::vector<Point> verts;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (alive[i]) verts.push_back(std::move(cand[i]));
  cand = std::move(verts);
  return LatticePolytope(dim, std::move(cand));
}

bool LatticePolytope::contains(const Point& p) const {
  if (p.size() != dim_) throw std::invalid_argument("point dimension does not match polytope");
  return in_convex_hull(vertices_, p);
}

std::vector<Point> LatticePolytope::lattice_points() const {
  Point lo = vertices_.front(), hi = vertices_.front();
  for (const Point& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<Point> out;
  Point cur = lo;
  std::function<void(std::size_t)> scan = [&](std::size_t i) {
    if (i == dim_) {
      if (contains(cur)) out.push_back(cur);
      return;
    }
    for (Int x = lo[i]; x <= hi[i]; ++x) {
      cur[i] = x;
      scan(i + 1);
    }
  };
  scan(0);
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("Minkowski sum of mixed dimensions");
  std::vector<Point> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const Point& u : a.vertices())
    for (const Point& v : b.vertices()) {
      Point s = u;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
      sums.push_back(std::move(s));
    }
  return LatticePolytope::hull(sums);
}

LatticePolytope translate(const LatticePolytope& p, const Point& t) {
  if (t.size() != p.dimension()) throw std::invalid_argument("translation of mixed dimension");
  std::vector<Point> moved = p.vertices();
  for (Point& v : moved)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
  return LatticePolytope::hull(moved);
}

std::optional<Point> equal_up_to_translation(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dimension() != b.dimension() || a.vertices().size() != b.vertices().size()) return std::nullopt;
  // Vertices are sorted, and translation preserves lexicographic order.
  Point t = b.vertices().front();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] -= a.vertices().front()[i];
  for (std::size_t v = 0; v < a.vertices().size(); ++v)
    for (std::size_t i = 0; i < t.size(); ++i)
      if (a.vertices()[v][i] + t[i] != b.vertices()[v][i]) return std::nullopt;
  return t;
}

}  // namespace clusterkit
