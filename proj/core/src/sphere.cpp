#include "polyconst/sphere.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polyconst {

double sphere_complement(const ExtendedExponent& p, double t) noexcept {
  const double a = std::abs(t);
  if (p.is_infinite()) return 1.0;
  if (a == 0.0) return 1.0;
  if (a >= 1.0) return 0.0;
  const double pv = p.value();
  if (pv == 1.0) return 1.0 - a;
  if (pv == 2.0) return std::sqrt((1.0 - a) * (1.0 + a));
  const double tp = std::exp(pv * std::log(a));
  return std::exp(std::log1p(-tp) / pv);
}

namespace {

void check_parameter(double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::invalid_argument("sphere parameter must lie in [-1, 1], got " + std::to_string(t));
  }
}

}  // namespace

SpherePoint sphere_point(const ExtendedExponent& p, double t, Branch branch) {
  check_parameter(t);
  return SpherePoint{t, sign_of(branch) * sphere_complement(p, t), t, branch};
}

SpherePoint sphere_edge_point(const ExtendedExponent& p, int edge, double t) {
  check_parameter(t);
  const double g = sphere_complement(p, t);
  switch (edge) {
    case 0: return SpherePoint{t, g, t, Branch::Plus};
    case 1: return SpherePoint{t, -g, t, Branch::Minus};
    case 2: return SpherePoint{g, t, t, Branch::Plus};
    case 3: return SpherePoint{-g, t, t, Branch::Minus};
    default: break;
  }
  throw std::invalid_argument("sphere edge index must be 0..3, got " + std::to_string(edge));
}

double edge_half_width(const ExtendedExponent& p) noexcept {
  if (p.is_infinite()) return 1.0;
  return std::exp2(-1.0 / p.value());
}

double edge_curvature_bound(const ExtendedExponent& p) noexcept {
  if (p.is_infinite()) return 0.0;
  const double pv = p.value();
  if (pv == 1.0) return 0.0;
  if (pv < 2.0) return std::numeric_limits<double>::infinity();
  return 2.0 * (pv - 1.0) / edge_half_width(p);
}

}  // namespace polyconst
