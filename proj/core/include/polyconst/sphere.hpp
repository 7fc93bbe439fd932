#ifndef POLYCONST_SPHERE_HPP
#define POLYCONST_SPHERE_HPP

#include <array>

#include "polyconst/exponent.hpp"

namespace polyconst {

enum class Branch { Plus, Minus };

constexpr double sign_of(Branch b) noexcept { return b == Branch::Plus ? 1.0 : -1.0; }

/// A point of the unit sphere of l_p^2 together with the chart coordinates
/// that produced it.
struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  Branch branch = Branch::Plus;
};

/// (1 - |t|^p)^{1/p} for |t| <= 1, evaluated as exp(log1p(-|t|^p) / p) so the
/// chart stays accurate next to |t| = 1. Returns exactly 1 at t = 0 and
/// exactly 0 at |t| = 1; returns 1 for every |t| <= 1 when p = inf.
double sphere_complement(const ExtendedExponent& p, double t) noexcept;

/// The graph chart x = t, y = branch * (1 - |t|^p)^{1/p}. For p = inf this is
/// the edge y = +-1; the transposed edges are reached through sphere_edge_point.
/// Throws std::invalid_argument for t outside [-1, 1].
SpherePoint sphere_point(const ExtendedExponent& p, double t, Branch branch);

/// Four-edge variant covering the sphere with both graph charts:
///   edge 0: (t, +g(t))   edge 1: (t, -g(t))
///   edge 2: (+g(t), t)   edge 3: (-g(t), t)
/// where g = sphere_complement. For p = inf these are the four sides of the
/// square. Throws std::invalid_argument for t outside [-1, 1] or edge outside 0..3.
SpherePoint sphere_edge_point(const ExtendedExponent& p, int edge, double t);

/// Half-width d of the parameter range used on every edge when scanning:
/// |t| <= d with d = 2^{-1/p} (1 for p = inf). On that range |g'| <= 1, and the
/// four edges still cover the whole sphere.
double edge_half_width(const ExtendedExponent& p) noexcept;

/// Upper bound on |g''| over |t| <= edge_half_width(p) for p >= 2, which is
/// 2(p-1)/d attained at the diagonal; 0 for p in {1, inf}. For 1 < p < 2 the
/// second derivative is unbounded at t = 0 and this returns +inf.
double edge_curvature_bound(const ExtendedExponent& p) noexcept;

}  // namespace polyconst

#endif
