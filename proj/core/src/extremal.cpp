#include "polyconst/extremal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyconst {

namespace {

void check_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
}

double beta_of(double p, double alpha) {
  return sphere_complement(ExtendedExponent(p), alpha);
}

/// 2ab(a^{p-2} + b^{p-2}) written as 2(b a^{p-1} + a b^{p-1}); finite at a = 0
/// or b = 0 for every p > 1.
double cross_numerator(double p, double a, double b) {
  const double ta = (a == 0.0) ? 0.0 : b * std::pow(a, p - 1.0);
  const double tb = (b == 0.0) ? 0.0 : a * std::pow(b, p - 1.0);
  return 2.0 * (ta + tb);
}

void check_grecu_exponent(const ExtendedExponent& p) {
  if (p.is_infinite()) throw std::invalid_argument("Grecu families need finite p");
  if (p.value() <= 1.0 || p.value() == 2.0) {
    throw std::invalid_argument("Grecu families need p > 1 and p != 2");
  }
}

HomogeneousPoly2 unit_normalized(HomogeneousPoly2 poly, const SphereGrid& grid) {
  const double n = sup_norm(poly, grid);
  if (!(n > 0.0)) throw NumericalFailure("cannot normalize a polynomial with zero sup-norm");
  return poly * (1.0 / n);
}

}  // namespace

std::string to_string(GrecuFamily f) {
  switch (f) {
    case GrecuFamily::I: return "i";
    case GrecuFamily::II: return "ii";
    case GrecuFamily::III: return "iii";
  }
  return "?";
}

HomogeneousPoly2 ext_sup1_a(std::array<int, 3> signs) {
  for (int s : signs) check_sign(s);
  return HomogeneousPoly2{static_cast<double>(signs[0]), 2.0 * signs[1], static_cast<double>(signs[2])};
}

std::vector<HomogeneousPoly2> ext_sup1_a_all() {
  std::vector<HomogeneousPoly2> out;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) out.push_back(ext_sup1_a({s0, s1, s2}));
  return out;
}

HomogeneousPoly2 ext_sup1_b(double t, int sign) {
  check_sign(sign);
  const double a = std::abs(t);
  if (!(a > 2.0 && a <= 4.0)) {
    throw std::invalid_argument("ext_sup1_b needs |t| in (2, 4], got " + std::to_string(t));
  }
  // 4|t| - t^2 = |t| (4 - |t|), exactly zero at |t| = 4.
  const double half = 0.5 * std::sqrt(a * (4.0 - a));
  return HomogeneousPoly2{sign * half, t, -sign * half};
}

HomogeneousPoly2 ext_supinf_axis(bool x_axis, int sign) {
  check_sign(sign);
  return x_axis ? HomogeneousPoly2{static_cast<double>(sign), 0.0, 0.0}
                : HomogeneousPoly2{0.0, 0.0, static_cast<double>(sign)};
}

HomogeneousPoly2 ext_supinf_c(double t, int outer, int inner) {
  check_sign(outer);
  check_sign(inner);
  if (!(t >= 0.5 && t <= 1.0)) {
    throw std::invalid_argument("ext_supinf_c needs t in [1/2, 1], got " + std::to_string(t));
  }
  const double cross = 2.0 * std::sqrt(t * (1.0 - t));
  return HomogeneousPoly2{outer * t, outer * inner * cross, -outer * t};
}

HomogeneousPoly2 ext_supp_iii_raw(double p, double alpha) {
  const double beta = beta_of(p, alpha);
  const double den = alpha * alpha - beta * beta;
  const double a = (std::pow(alpha, p) - std::pow(beta, p)) / den;
  const double b = cross_numerator(p, alpha, beta) / den;
  return HomogeneousPoly2{a, b, -a};
}

HomogeneousPoly2 ext_supp(const ExtendedExponent& p, double alpha, GrecuFamily family, int sign,
                          const SphereGrid& grid) {
  check_grecu_exponent(p);
  check_sign(sign);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("ext_supp needs alpha in [0, 1], got " + std::to_string(alpha));
  }
  const double pv = p.value();
  const double beta = beta_of(pv, alpha);
  const double s = static_cast<double>(sign);

  switch (family) {
    case GrecuFamily::II: {
      const double den = alpha * alpha + beta * beta;
      const double a = (std::pow(alpha, pv) - std::pow(beta, pv)) / den;
      const double b = cross_numerator(pv, alpha, beta) / den;
      return HomogeneousPoly2{s * a, s * b, -s * a};
    }
    case GrecuFamily::I: {
      if (pv > 2.0) {
        const ExtendedExponent r(pv / (pv - 2.0));
        const double c = sphere_complement(r, alpha);
        return HomogeneousPoly2{s * alpha, 0.0, s * c};
      }
      if (!(grid.exponent() == p)) throw std::invalid_argument("grid exponent does not match p");
      return unit_normalized(HomogeneousPoly2{s * alpha, 0.0, s * beta}, grid);
    }
    case GrecuFamily::III: {
      if (pv > 2.0) throw std::invalid_argument("Grecu family (iii) exists only for 1 < p < 2");
      if (!(grid.exponent() == p)) throw std::invalid_argument("grid exponent does not match p");
      const double diff = alpha * alpha - beta * beta;
      const double a = std::pow(alpha, pv) - std::pow(beta, pv);
      const double b = cross_numerator(pv, alpha, beta);
      // Multiplying through by (a^2 - b^2) only rescales the direction; keep its
      // sign so the member agrees with the closed form away from the diagonal.
      const double orient = diff < 0.0 ? -1.0 : 1.0;
      return unit_normalized(HomogeneousPoly2{s * orient * a, s * orient * b, -s * orient * a}, grid);
    }
  }
  throw std::invalid_argument("unknown Grecu family");
}

HomogeneousPoly2 ext_supp(const ExtendedExponent& p, double alpha, GrecuFamily family, int sign) {
  check_grecu_exponent(p);
  const bool needs_grid = p.value() < 2.0 && family != GrecuFamily::II;
  // Closed-form members never scan the grid; two points carry the exponent.
  return ext_supp(p, alpha, family, sign, SphereGrid(p, needs_grid ? ScanConfig{}.scan_points : 2));
}

std::vector<HomogeneousPoly2> ext_coeff_ball(const ExtendedExponent& q, int m) {
  if (m < 1) throw std::invalid_argument("ext_coeff_ball needs degree m >= 1");
  if (q.is_finite() && q.value() != 1.0) {
    throw std::invalid_argument("coefficient-ball extreme points are finite only for q in {1, inf}");
  }
  std::vector<HomogeneousPoly2> out;
  const int n = m + 1;
  if (q.is_finite()) {
    for (int k = 0; k < n; ++k) {
      out.push_back(HomogeneousPoly2::monomial(m, k, 1.0));
      out.push_back(HomogeneousPoly2::monomial(m, k, -1.0));
    }
    return out;
  }
  if (n > 30) throw std::invalid_argument("ext_coeff_ball(inf, m) would enumerate more than 2^30 members");
  const unsigned long count = 1ul << n;
  out.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<double> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = (mask >> k) & 1ul ? -1.0 : 1.0;
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<ExtremeFamily> extreme_families(BallKind ball, const ExtendedExponent& e) {
  std::vector<ExtremeFamily> out;
  if (ball == BallKind::CoeffNorm) {
    if (e.is_infinite()) {
      out.push_back({ball, e, "coeff-signs", std::nullopt, 8, false});
    } else if (e.value() == 1.0) {
      out.push_back({ball, e, "coeff-basis", std::nullopt, 6, false});
    } else {
      throw std::invalid_argument("coefficient-ball extreme points are finite only for q in {1, inf}");
    }
    return out;
  }
  if (e.is_infinite()) {
    out.push_back({ball, e, "CK-a/b", std::nullopt, 4, false});
    out.push_back({ball, e, "CK-c", Interval{0.5, 1.0}, 4, false});
    return out;
  }
  const double p = e.value();
  if (p == 1.0) {
    out.push_back({ball, e, "CKK-a", std::nullopt, 8, false});
    out.push_back({ball, e, "CKK-b", Interval{2.0, 4.0, true, false}, 4, false});
    return out;
  }
  if (p == 2.0) throw std::invalid_argument("no extreme-point family catalogue for p = 2");
  const bool below_two = p < 2.0;
  out.push_back({ball, e, "Grecu-i", Interval{0.0, 1.0}, 2, below_two});
  out.push_back({ball, e, "Grecu-ii", Interval{0.0, 1.0}, 2, false});
  if (below_two) out.push_back({ball, e, "Grecu-iii", Interval{0.0, 1.0}, 2, true});
  return out;
}

}  // namespace polyconst
