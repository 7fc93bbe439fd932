#ifndef POLYCONST_ORACLE_HPP
#define POLYCONST_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "polyconst/exponent.hpp"
#include "polyconst/polynomial.hpp"
#include "polyconst/sup_norm.hpp"

namespace polyconst {

/// Brute-force cross-checks for the analytic pipeline. The oracles share
/// only `evaluate` and the sphere chart with the main path.

struct OracleReport {
  std::size_t checked = 0;
  /// Number of checked items outside tolerance.
  std::size_t violations = 0;
  double max_violation = 0.0;
  std::string worst_case;
  bool passed = false;
  double tolerance = 0.0;
  double resolution_bound = 0.0;
  double empirical_min = 0.0;
  double empirical_max = 0.0;
  std::uint64_t seed = 0;
  std::string notes;
};

/// Standard normal deviates from std::mt19937_64 through the Box-Muller
/// transform. Both pieces are fully specified, so a seed yields the same
/// sequence on every platform (unlike std::normal_distribution).
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform_open();  // (0, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Plain uniform scan of `nodes`+1 parameter values on each of the four
/// edges (no symmetry, no refinement). Never exceeds the true sup-norm.
/// Throws std::invalid_argument for nodes < 1000.
double sup_norm_oracle(const HomogeneousPoly2& poly, const ExtendedExponent& p, int nodes);

/// Worst-case gap between the true sup-norm and sup_norm_oracle(poly, p, nodes).
///
/// Along an edge Q(t) = P(x(t), y(t)) with one coordinate equal to t and the
/// other +-g(t), |g'| <= 1. At an interior maximum Q'(t*) = 0 and the nearest
/// node is within delta = h/2 (h the node spacing), so with |P|_1 = L:
///   p in {1, inf} or p >= 2:  L (2 m (m-1) + m kappa / 2) delta^2,
///                             kappa = edge_curvature_bound(p);
///   1 < p < 2:                L (2 m (m-1) delta^2 + 2 m (delta^p + delta^2)),
///                             from the (p-1)-Hoelder continuity of g'.
/// Maxima at edge endpoints are nodes and contribute no error.
double oracle_resolution_bound(const HomogeneousPoly2& poly, const ExtendedExponent& p, int nodes);

/// Draws a polynomial with i.i.d. standard normal coefficients and divides it
/// by its sup-norm on `grid`.
HomogeneousPoly2 random_unit_polynomial(NormalSampler& rng, int degree, const SphereGrid& grid,
                                        const ScanConfig& cfg = {});

/// Checks k - tol <= |P|_q <= K + tol (tol = 1e-8) on `samples` seeded random
/// degree-2 polynomials of unit sup-norm. The lower side is checked only when
/// k is exact (q in {1, inf}); otherwise notes say so.
OracleReport sandwich_check(const ExtendedExponent& q, const ExtendedExponent& p, std::size_t samples,
                            std::uint64_t seed, const ScanConfig& cfg = {});

/// Sweeps the family parameter over `grid` uniform steps and reports
/// max |f(t) - |member(t)|_q|; passes iff that is <= 1e-12. Supported p:
/// 1 (CKK-b on (2, 4]), inf (CK-c on [1/2, 1]) and finite p > 1, p != 2
/// (Grecu family (ii) on [0, 1]). For 1 < p < 2 notes also compare family
/// (iii) against family (ii).
OracleReport family_consistency_check(const ExtendedExponent& q, const ExtendedExponent& p, int grid);

}  // namespace polyconst

#endif
