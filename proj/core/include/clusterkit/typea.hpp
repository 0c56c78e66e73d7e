#pragma once

// Type A_n through triangulations of the (n+3)-gon.
//
// Polygon vertices are 0..n+2 in counterclockwise order; the boundary edge
// B_i joins vertices i-1 and i (mod n+3). Diagonals are labelled 1..n.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/fpoly.hpp"
#include "clusterkit/polytope.hpp"

namespace clusterkit {

struct Triangulation {
  int n = 0;
  /// diagonals[l-1] is tau_l, endpoints ascending.
  std::vector<std::pair<int, int>> diagonals;
  /// v_1..v_n: the vertex cut off when tau_i was drawn.
  std::vector<int> distinguished;

  int vertices() const { return n + 3; }
  bool is_boundary(int a, int b) const;
  /// Label l of the diagonal {a,b}, or 0.
  int diagonal_label(int a, int b) const;
  bool is_edge(int a, int b) const { return is_boundary(a, b) || diagonal_label(a, b) != 0; }
  /// "3" for tau_3, "B4" for a boundary edge.
  std::string edge_name(int a, int b) const;
  /// Every triangle, vertices ascending (hence counterclockwise).
  std::vector<std::vector<int>> triangles() const;
};

/// Ear-cutting construction from a Coxeter word of A_n. Vertex `start` plays
/// the role of v_1; tau_i is cut clockwise from v_{i-1} if letter i precedes
/// letter i-1 in c, counterclockwise otherwise.
Triangulation triangulation_of_coxeter(const Word& c, int n, int start = 0);

/// A diagonal outside the triangulation, oriented from `from` to `to`.
struct OrientedDiagonal {
  int from = 0;
  int to = 0;
  /// Labels of the crossed diagonals t_1..t_d in the order met.
  std::vector<int> crossings;
};

/// The diagonal crossing exactly tau_i..tau_j, oriented to meet tau_i first.
OrientedDiagonal diagonal_of_root(const Triangulation& t, int i, int j);

struct TPath {
  /// +1 / -1 per crossed diagonal.
  std::vector<int> signs;
  /// x_0 = from, ..., x_{2d+1} = to.
  std::vector<int> vertices;
  /// Labels t_1..t_d.
  std::vector<int> crossings;

  friend bool operator==(const TPath&, const TPath&) = default;
};

/// The path travelling each t_k in the given direction, if it is a T-path.
std::optional<TPath> tpath_from_signs(const Triangulation& t, const OrientedDiagonal& g,
                                      const std::vector<int>& signs);
/// Every T-path, greedy (all positive) first, in decreasing sign order.
std::vector<TPath> enumerate_tpaths(const Triangulation& t, const OrientedDiagonal& g);
/// Reverses the direction of t_k (1-based) if the result is again a T-path.
std::optional<TPath> flip_tpath(const Triangulation& t, const OrientedDiagonal& g, const TPath& z, int k);
/// The antigreedy path with tau_{i_1}, ..., tau_{i_m} flipped in this order;
/// every intermediate path is again a T-path. Throws InvariantViolation if
/// some flip is not available.
TPath tpath_of_prefix(const Triangulation& t, const OrientedDiagonal& g, const Word& prefix);

/// "B5 1+ 1 2+ 3 3+ B2".
std::string to_string(const Triangulation& t, const TPath& z);

/// y-exponent of the positively travelled diagonals.
Exponent monomial_of_tpath(const TPath& z, int n);

FPolynomial f_poly_via_tpaths(const Triangulation& t, int i, int j);
FPolynomial f_poly_via_prefixes(const Word& c, int i, int j);

/// For each 1 <= i <= j <= n (i outer), the indicator vectors of the prefixes
/// of c restricted to {i..j}, sorted.
std::vector<std::vector<Point>> loday_summands(const Word& c);
/// Minkowski sum of the hulls of loday_summands(c), in root coordinates.
LatticePolytope loday_polytope(const Word& c);

}  // namespace clusterkit
