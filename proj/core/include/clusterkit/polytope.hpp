#pragma once

#include <optional>
#include <vector>

#include "clusterkit/rootsys.hpp"

namespace clusterkit {

using Point = std::vector<Int>;

/// Is p a convex combination of pts? Exact (rational phase-1 simplex).
bool in_convex_hull(const std::vector<Point>& pts, const Point& p);

/// Convex hull of finitely many integer points, stored by its vertices in
/// lexicographic order.
class LatticePolytope {
public:
  /// Throws std::invalid_argument on an empty input or mixed dimensions.
  static LatticePolytope hull(const std::vector<Point>& points);

  std::size_t dimension() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  bool contains(const Point& p) const;
  /// Every integer point of the polytope, sorted.
  std::vector<Point> lattice_points() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

private:
  LatticePolytope(std::size_t dim, std::vector<Point> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
};

inline LatticePolytope hull(const std::vector<Point>& points) { return LatticePolytope::hull(points); }

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope translate(const LatticePolytope& p, const Point& t);

/// The t with b = a + t, if any.
std::optional<Point> equal_up_to_translation(const LatticePolytope& a, const LatticePolytope& b);

}  // namespace clusterkit
