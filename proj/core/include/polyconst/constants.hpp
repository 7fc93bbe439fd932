#ifndef POLYCONST_CONSTANTS_HPP
#define POLYCONST_CONSTANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyconst/exponent.hpp"
#include "polyconst/extremal.hpp"
#include "polyconst/optimizer.hpp"
#include "polyconst/polynomial.hpp"

namespace polyconst {

enum class Method { ClosedForm, Optimized, Enumerated, Estimated, Conjectural };

std::string to_string(Method m);

/// A computed constant together with what attains it.
struct ConstantResult {
  double value = 0.0;
  std::optional<double> attaining_parameter;
  std::optional<HomogeneousPoly2> attaining_polynomial;
  Method method = Method::Optimized;
  std::string notes;
  /// Set for quantities of high degree (power bounds); `value` is then
  /// scaled->value() and may be +inf if it leaves the double range.
  std::optional<ScaledLogValue> scaled;
};

/// K_{2,q,p}: the smallest K with |P|_q <= K ||P||_p on P(^2 R^2).
///
/// p = 1 and p = inf maximize |.|_q over the Choi-Kim(-Ki) families, p > 2
/// over Grecu families (i) and (ii). For 1 < p < 2 the maximum is taken over
/// families (i), (ii) and (iii) and the result is tagged Conjectural; notes
/// report whether (iii) beats (ii). p = 2 uses the rotation-invariant
/// extreme set (+-(x^2 + y^2) and the reflections) and is tagged Estimated.
ConstantResult big_K(const ExtendedExponent& q, const ExtendedExponent& p, const ScanConfig& cfg = {});

/// k_{2,q,p} = 1 / max{ ||P||_p : P extreme in B_{|.|_q} } for q in {1, inf}.
/// Throws std::invalid_argument for 1 < q < inf.
ConstantResult little_k(const ExtendedExponent& q, const ExtendedExponent& p, const ScanConfig& cfg = {});

/// Upper estimate of k_{2,q,p} for 1 < q < inf from a grid over the unit
/// sphere of (R^3, |.|_q): polar angle in [0, pi/2] and azimuth in [0, 2 pi)
/// with `grid` steps each (P and -P share a norm, so a hemisphere suffices).
/// Grids whose sizes divide one another are nested, so refining a grid by an
/// integer factor never increases the estimate.
/// Throws std::invalid_argument for q in {1, inf} or grid < 16.
ConstantResult estimate_little_k(const ExtendedExponent& q, const ExtendedExponent& p, int grid);

/// Hardy-Littlewood exponent for degree 2: p/(p-2) on (2, 4], 4p/(3p-4) on
/// [4, inf), 4/3 at p = inf. Throws std::invalid_argument for p <= 2.
ExtendedExponent hl_exponent(const ExtendedExponent& p);

/// C_{R,2,p}(2) for 2 < p <= 4 and D_{R,2,p}(2) for p >= 4, as K_{2,q,p} at
/// the Hardy-Littlewood exponent q.
ConstantResult hl_constant(const ExtendedExponent& p, const ScanConfig& cfg = {});

struct PhiPsi {
  double phi = 0.0;
  double psi = 0.0;
  double phi_argmax = 0.0;
  double psi_argmax = 0.0;
};

/// Phi(p) = max phi_diag(p, .) and Psi(p) = max f_qp(4p/(3p-4), p, .), p >= 4.
PhiPsi phi_psi(double p, const ScanConfig& cfg = {});

/// 2^{(m^2 p + 10 m - p - 6 m^2 - 4) / (4 m p)} for m >= 2, 2m <= p < inf.
double baseline_bound(int m, double p);

/// Lower bound |P^m|_2 on D_{R,2m,4m}(2) = C_{R,2m,4m}(2), maximized over the
/// family (ii) members P for p = 4m (each has ||P^m||_{4m} = 1). The result
/// carries the log-scaled value of degree 2m and the attaining alpha.
ConstantResult power_lower_bound(int m, const ScanConfig& alpha_cfg = {});

/// Same scan as power_lower_bound but with every coefficient of P replaced by
/// its absolute value before taking the power. This is NOT a valid lower
/// bound: the modified polynomial leaves the unit ball. `notes` records its
/// l_{4m} sup-norm and the corrected ratio |Q^m|_2 / ||Q||_{4m}^m.
ConstantResult absolute_power_variant(int m, const ScanConfig& alpha_cfg = {});

struct Degree5Showcase {
  /// |P|_2 / ||P||_10 for the six listed asymmetric coefficients.
  ConstantResult asymmetric;
  /// The same ratio for the listed symmetric coefficients (a, b, c).
  ConstantResult symmetric_listed;
  /// Best ratio found over the symmetric family a x^5 - b x^4 y - c x^3 y^2
  /// + c x^2 y^3 + b x y^4 - a y^5.
  ConstantResult symmetric_optimized;
};

HomogeneousPoly2 degree5_asymmetric_polynomial();
HomogeneousPoly2 degree5_symmetric_polynomial(double a, double b, double c);

Degree5Showcase showcase_degree5(const ScanConfig& cfg = {});

}  // namespace polyconst

#endif
