#ifndef POLYCONST_EXTREMAL_HPP
#define POLYCONST_EXTREMAL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyconst/exponent.hpp"
#include "polyconst/polynomial.hpp"
#include "polyconst/sup_norm.hpp"

namespace polyconst {

/// Generators for the extreme points of the unit balls of P(^2 l_p^2) and of
/// the coefficient balls B_{|.|_q}, q in {1, inf}.

enum class BallKind { SupNorm, CoeffNorm };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double t) const noexcept {
    return (lo_open ? t > lo : t >= lo) && (hi_open ? t < hi : t <= hi);
  }
};

/// Descriptor of one extreme-point family. Finite families have no
/// parameter range; `sign_choices` counts the admissible sign patterns.
struct ExtremeFamily {
  BallKind ball = BallKind::SupNorm;
  ExtendedExponent exponent = ExtendedExponent(1.0);
  std::string sub_family;
  std::optional<Interval> parameter_range;
  int sign_choices = 1;
  /// Members are produced by dividing a formula by its computed sup-norm
  /// rather than by the formula alone.
  bool normalized_numerically = false;
};

/// All extreme-point families of the degree-2 sup-norm ball for exponent p
/// (or of the coefficient ball when ball == CoeffNorm, q in {1, inf}).
std::vector<ExtremeFamily> extreme_families(BallKind ball, const ExtendedExponent& exponent);

// ---- p = 1 ---------------------------------------------------------------

/// Sub-family (a): s0 x^2 + 2 s1 xy + s2 y^2 with s_i = +-1.
HomogeneousPoly2 ext_sup1_a(std::array<int, 3> signs);
/// All eight members of sub-family (a).
std::vector<HomogeneousPoly2> ext_sup1_a_all();
/// Sub-family (b): sign * (sqrt(4|t| - t^2) / 2) (x^2 - y^2) + t xy, |t| in (2, 4].
/// Throws std::invalid_argument for |t| outside (2, 4] or sign not +-1.
HomogeneousPoly2 ext_sup1_b(double t, int sign = +1);

// ---- p = inf -------------------------------------------------------------

/// Sub-families (a), (b): sign * x^2 or sign * y^2.
HomogeneousPoly2 ext_supinf_axis(bool x_axis, int sign = +1);
/// Sub-family (c): outer * (t x^2 - t y^2 + inner * 2 sqrt(t(1-t)) xy), t in [1/2, 1].
HomogeneousPoly2 ext_supinf_c(double t, int outer = +1, int inner = +1);

// ---- 1 < p < inf, p != 2 --------------------------------------------------

enum class GrecuFamily { I, II, III };

std::string to_string(GrecuFamily f);

/// Parameterized extreme polynomials of the unit ball of P(^2 l_p^2) for
/// finite p > 1, p != 2. The parameter alpha lies in [0, 1] and
/// beta = (1 - alpha^p)^{1/p}.
///
///   II  : sign * ((a^p - b^p)/(a^2 + b^2) (x^2 - y^2)
///                 + 2ab (a^{p-2} + b^{p-2})/(a^2 + b^2) xy)
///   I   : p > 2: sign * (alpha x^2 + c y^2), c = (1 - alpha^r)^{1/r},
///         r = p/(p-2), so |alpha|^r + |c|^r = 1.
///         1 < p < 2: the diagonal direction (alpha, beta), divided by its
///         sup-norm (the closed-form constraint has a negative exponent there).
///   III : 1 < p < 2 only. The direction
///         ((a^p - b^p)(x^2 - y^2) + 2ab (a^{p-2} + b^{p-2}) xy) / (a^2 - b^2),
///         divided by its sup-norm; at a = b the division by a^2 - b^2 is
///         replaced by its limiting direction (+xy).
///
/// Throws std::invalid_argument for alpha outside [0, 1], p <= 1, p == 2,
/// p infinite, family III with p > 2, or sign not +-1.
HomogeneousPoly2 ext_supp(const ExtendedExponent& p, double alpha, GrecuFamily family, int sign = +1);

/// Same, normalizing families I and III (1 < p < 2) against a caller-supplied
/// grid, which must be built for the same exponent.
HomogeneousPoly2 ext_supp(const ExtendedExponent& p, double alpha, GrecuFamily family, int sign,
                          const SphereGrid& grid);

/// Raw closed-form family III coefficients (no normalization). Diverges as
/// alpha approaches the diagonal point; exposed for diagnostics.
HomogeneousPoly2 ext_supp_iii_raw(double p, double alpha);

/// Extreme points of the coefficient ball of degree-m polynomials:
/// q = 1 -> the 2(m+1) signed monomials, q = inf -> the 2^{m+1} sign patterns.
/// Throws std::invalid_argument for finite q > 1 or m < 1.
std::vector<HomogeneousPoly2> ext_coeff_ball(const ExtendedExponent& q, int m);

}  // namespace polyconst

#endif
