#include "polyconst/sup_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyconst {

SphereGrid::SphereGrid(const ExtendedExponent& p, int points_per_edge)
    : p_(p), n_(points_per_edge), d_(edge_half_width(p)) {
  if (points_per_edge < 2) throw std::invalid_argument("SphereGrid needs at least 2 points per edge");
  for (int e = 0; e < 4; ++e) {
    auto& nodes = nodes_[static_cast<std::size_t>(e)];
    nodes.reserve(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i <= n_; ++i) {
      const auto sp = sphere_edge_point(p_, e, parameter(i));
      nodes.push_back(Point2{sp.x, sp.y});
    }
  }
}

double scan_resolution_bound(const HomogeneousPoly2& poly, const ExtendedExponent& p, int nodes) {
  if (nodes < 1) throw std::invalid_argument("scan_resolution_bound needs nodes >= 1");
  const double L = coeff_norm(poly, ExtendedExponent(1.0));
  const double m = poly.degree();
  const double delta = edge_half_width(p) / nodes;  // half of the spacing 2d/nodes
  const double kappa = edge_curvature_bound(p);
  if (std::isfinite(kappa)) {
    return L * (2.0 * m * (m - 1.0) + 0.5 * m * kappa) * delta * delta;
  }
  const double pv = p.value();
  return L * (2.0 * m * (m - 1.0) * delta * delta + 2.0 * m * (std::pow(delta, pv) + delta * delta));
}

SupNormResult sup_norm_detailed(const HomogeneousPoly2& poly, const SphereGrid& grid,
                                const ScanConfig& cfg) {
  cfg.validate();
  SupNormResult out;
  const int n = grid.points_per_edge();
  const auto& p = grid.exponent();
  const double slack = scan_resolution_bound(poly, p, n);
  constexpr std::size_t max_candidates = 8;
  std::vector<double> vals(static_cast<std::size_t>(n) + 1);
  std::vector<int> cand;
  bool first = true;

  for (int e : {0, 2}) {
    const auto nodes = grid.edge(e);
    double best_value = -1.0;
    for (int i = 0; i <= n; ++i) {
      const auto& v = nodes[static_cast<std::size_t>(i)];
      vals[static_cast<std::size_t>(i)] = std::abs(evaluate(poly, v.x, v.y));
      best_value = std::max(best_value, vals[static_cast<std::size_t>(i)]);
    }
    out.evaluations += static_cast<std::size_t>(n) + 1;

    // Near-equal peaks (e.g. the two ends of an edge) can swap order after
    // refinement, so every discrete local max within the scan resolution of
    // the best node gets refined.
    cand.clear();
    for (int i = 0; i <= n; ++i) {
      const double v = vals[static_cast<std::size_t>(i)];
      const bool left_ok = i == 0 || v > vals[static_cast<std::size_t>(i - 1)];
      const bool right_ok = i == n || v >= vals[static_cast<std::size_t>(i + 1)];
      if (left_ok && right_ok && v >= best_value - slack) cand.push_back(i);
    }
    if (cand.empty()) {
      for (int i = 0; i <= n; ++i)
        if (vals[static_cast<std::size_t>(i)] == best_value) {
          cand.push_back(i);
          break;
        }
    }
    if (cand.size() > max_candidates) {
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)];
      });
      cand.resize(max_candidates);
    }

    auto along_edge = [&](double t) {
      const auto sp = sphere_edge_point(p, e, t);
      return std::abs(evaluate(poly, sp.x, sp.y));
    };
    for (int best : cand) {
      const double a = grid.parameter(best > 0 ? best - 1 : 0);
      const double b = grid.parameter(best < n ? best + 1 : n);
      const auto r = golden_refine(along_edge, a, b, grid.parameter(best), vals[static_cast<std::size_t>(best)], cfg);
      out.evaluations += r.evaluations;
      if (first || r.value > out.value) {
        first = false;
        out.value = r.value;
        out.edge = e;
        out.where = sphere_edge_point(p, e, r.argmax);
      }
    }
  }
  return out;
}

double sup_norm(const HomogeneousPoly2& poly, const SphereGrid& grid, const ScanConfig& cfg) {
  return sup_norm_detailed(poly, grid, cfg).value;
}

double sup_norm(const HomogeneousPoly2& poly, const ExtendedExponent& p, const ScanConfig& cfg) {
  cfg.validate();
  return sup_norm(poly, SphereGrid(p, cfg.scan_points), cfg);
}

}  // namespace polyconst
