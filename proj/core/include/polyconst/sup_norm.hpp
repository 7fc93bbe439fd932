#ifndef POLYCONST_SUP_NORM_HPP
#define POLYCONST_SUP_NORM_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "polyconst/exponent.hpp"
#include "polyconst/optimizer.hpp"
#include "polyconst/polynomial.hpp"
#include "polyconst/sphere.hpp"

namespace polyconst {

struct Point2 {
  double x;
  double y;
};

/// Precomputed scan nodes for the unit sphere of l_p^2: `points_per_edge`+1
/// uniform values of t in [-d, d] on each of the four edges of
/// sphere_edge_point (d = edge_half_width(p)). Building the grid is the
/// expensive part of a sup-norm scan; reuse one grid across many polynomials.
class SphereGrid {
 public:
  SphereGrid(const ExtendedExponent& p, int points_per_edge);

  const ExtendedExponent& exponent() const noexcept { return p_; }
  int points_per_edge() const noexcept { return n_; }
  double half_width() const noexcept { return d_; }
  /// Parameter spacing between neighbouring nodes on an edge.
  double spacing() const noexcept { return 2.0 * d_ / n_; }
  double parameter(int i) const noexcept { return i == n_ ? d_ : -d_ + spacing() * i; }
  std::span<const Point2> edge(int e) const { return nodes_.at(static_cast<std::size_t>(e)); }

 private:
  ExtendedExponent p_;
  int n_;
  double d_;
  std::array<std::vector<Point2>, 4> nodes_;
};

struct SupNormResult {
  double value = 0.0;
  SpherePoint where;
  int edge = 0;
  std::size_t evaluations = 0;
};

/// Upper bound on how far the true max of |P| along an edge can exceed the
/// best of `nodes + 1` uniform nodes on it (spacing 2d/nodes).
///   p >= 2 or p in {1, inf}: L (2m(m-1) + m kappa / 2) delta^2
///   1 < p < 2:               L (2m(m-1) delta^2 + 2m (delta^p + delta^2))
/// with L = |P|_1, delta = d/nodes, kappa = edge_curvature_bound(p).
double scan_resolution_bound(const HomogeneousPoly2& poly, const ExtendedExponent& p, int nodes);

/// max |P| over the unit sphere of l_p^2 (equal to the sup over the ball).
/// Scans cfg.scan_points per edge, then golden-refines each discrete local max
/// within scan_resolution_bound of the best node (at most 8 per edge) to
/// cfg.refine_tol. Uses |P(-v)| = |P(v)| to scan only edges 0 and 2.
SupNormResult sup_norm_detailed(const HomogeneousPoly2& poly, const SphereGrid& grid,
                                const ScanConfig& cfg = {});

double sup_norm(const HomogeneousPoly2& poly, const SphereGrid& grid, const ScanConfig& cfg = {});

/// Convenience overload that builds the grid from cfg.scan_points.
double sup_norm(const HomogeneousPoly2& poly, const ExtendedExponent& p, const ScanConfig& cfg = {});

}  // namespace polyconst

#endif
