#include "polyconst/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyconst/objectives.hpp"
#include "polyconst/parallel.hpp"
#include "polyconst/sup_norm.hpp"

namespace polyconst {

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Optimized: return "optimized";
    case Method::Enumerated: return "enumerated";
    case Method::Estimated: return "estimated";
    case Method::Conjectural: return "conjectural";
  }
  return "?";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

ConstantResult optimized(const OptResult& r, HomogeneousPoly2 poly, std::string notes) {
  ConstantResult out;
  out.value = r.value;
  out.attaining_parameter = r.argmax;
  out.attaining_polynomial = std::move(poly);
  out.method = Method::Optimized;
  out.notes = std::move(notes);
  return out;
}

ConstantResult big_K_p1(const ExtendedExponent& q, const ScanConfig& cfg) {
  const auto fam = Objective::make_fq1(q);
  const auto r = maximize(fam, fam.domain.lo, fam.domain.hi, cfg);
  const auto a_member = ext_sup1_a({1, 1, 1});
  const double a_value = coeff_norm(a_member, q);
  if (a_value >= r.value) {
    ConstantResult out;
    out.value = a_value;
    out.attaining_polynomial = a_member;
    out.method = Method::Enumerated;
    out.notes = "attained on sub-family (a); best of (b) = " + fmt(r.value);
    return out;
  }
  return optimized(r, ext_sup1_b(r.argmax, +1),
                   "max of f_{q,1} over [2,4]; sub-family (a) gives " + fmt(a_value));
}

ConstantResult big_K_pinf(const ExtendedExponent& q, const ScanConfig& cfg) {
  const auto fam = Objective::make_fqinf(q);
  const auto r = maximize(fam, fam.domain.lo, fam.domain.hi, cfg);
  if (1.0 > r.value) {
    ConstantResult out;
    out.value = 1.0;
    out.attaining_polynomial = ext_supinf_axis(true, +1);
    out.method = Method::Enumerated;
    out.notes = "attained by +-x^2, +-y^2";
    return out;
  }
  return optimized(r, ext_supinf_c(r.argmax, +1, +1),
                   "max of f_{q,inf} over [1/2,1]; monomials give 1");
}

ConstantResult big_K_pgt2(const ExtendedExponent& q, double p, const ScanConfig& cfg) {
  const auto fam = Objective::make_fqp(q, p);
  const auto r2 = maximize(fam, 0.0, 1.0, cfg);
  const ExtendedExponent pe(p);

  const double r_exp = p / (p - 2.0);
  double diag_value = 1.0;
  double diag_arg = 1.0;
  std::string diag_note = "family (i) max is 1 since q >= p/(p-2)";
  if (q.is_finite() && q.value() < r_exp) {
    const auto rd = maximize([&](double a) { return diag_objective(q, p, a); }, 0.0, 1.0, cfg);
    diag_value = rd.value;
    diag_arg = rd.argmax;
    diag_note = "family (i) max " + fmt(diag_value) + " at a = " + fmt(diag_arg);
  }

  if (diag_value > r2.value) {
    ConstantResult out;
    out.value = diag_value;
    out.attaining_parameter = diag_arg;
    out.attaining_polynomial = ext_supp(pe, diag_arg, GrecuFamily::I, +1);
    out.method = Method::Optimized;
    out.notes = diag_note + "; family (ii) max " + fmt(r2.value);
    return out;
  }
  return optimized(r2, ext_supp(pe, r2.argmax, GrecuFamily::II, +1),
                   "max of f_{q,p} over [0,1]; " + diag_note);
}

ConstantResult big_K_p12(const ExtendedExponent& q, double p, const ScanConfig& cfg) {
  const ExtendedExponent pe(p);
  const SphereGrid grid(pe, cfg.scan_points);

  const auto fam = Objective::make_fqp(q, p);
  const auto r2 = maximize(fam, 0.0, 1.0, cfg);

  // Families (i) and (iii) are normalized numerically, so each objective value
  // costs a sup-norm; a coarser parameter scan keeps this affordable.
  ScanConfig coarse = cfg;
  coarse.scan_points = std::max(64, cfg.scan_points / 8);
  const auto r1 = maximize(
      [&](double a) { return coeff_norm(ext_supp(pe, a, GrecuFamily::I, +1, grid), q); }, 0.0, 1.0, coarse);
  const auto r3 = maximize(
      [&](double a) { return coeff_norm(ext_supp(pe, a, GrecuFamily::III, +1, grid), q); }, 0.0, 1.0, coarse);

  ConstantResult out;
  out.method = Method::Conjectural;
  std::ostringstream notes;
  notes << "1<p<2: family (ii) max " << fmt(r2.value) << " at " << fmt(r2.argmax)
        << "; family (i) max " << fmt(r1.value) << "; family (iii) max " << fmt(r3.value) << " at "
        << fmt(r3.argmax);
  const double margin = r3.value - r2.value;
  if (margin > 1e-9) {
    notes << "; FLAG: family (iii) exceeds family (ii) by " << fmt(margin);
  } else {
    notes << "; family (iii) does not exceed family (ii)";
  }
  out.notes = notes.str();

  out.value = r2.value;
  out.attaining_parameter = r2.argmax;
  out.attaining_polynomial = ext_supp(pe, r2.argmax, GrecuFamily::II, +1);
  if (r1.value > out.value) {
    out.value = r1.value;
    out.attaining_parameter = r1.argmax;
    out.attaining_polynomial = ext_supp(pe, r1.argmax, GrecuFamily::I, +1, grid);
  }
  if (r3.value > out.value) {
    out.value = r3.value;
    out.attaining_parameter = r3.argmax;
    out.attaining_polynomial = ext_supp(pe, r3.argmax, GrecuFamily::III, +1, grid);
  }
  return out;
}

/// Rotation-invariant route for p = 2: the unit ball of P(^2 l_2^2) is the set
/// of symmetric 2x2 matrices with spectral norm <= 1, whose extreme points are
/// +-I and the reflections cos(th)(x^2 - y^2) + 2 sin(th) xy.
ConstantResult big_K_p2(const ExtendedExponent& q, const ScanConfig& cfg) {
  auto reflection = [](double th) {
    return HomogeneousPoly2{std::cos(th), 2.0 * std::sin(th), -std::cos(th)};
  };
  const auto r = maximize([&](double th) { return coeff_norm(reflection(th), q); }, 0.0,
                          std::numbers::pi / 2.0, cfg);
  const HomogeneousPoly2 identity{1.0, 0.0, 1.0};
  const double id_value = coeff_norm(identity, q);

  // Cross-check against the family (ii) objective on both sides of p = 2.
  constexpr double eps = 1e-6;
  const double below = maximize(Objective::make_fqp(q, 2.0 - eps), 0.0, 1.0, cfg).value;
  const double above = maximize(Objective::make_fqp(q, 2.0 + eps), 0.0, 1.0, cfg).value;

  ConstantResult out;
  out.method = Method::Estimated;
  if (id_value >= r.value) {
    out.value = id_value;
    out.attaining_polynomial = identity;
  } else {
    out.value = r.value;
    out.attaining_parameter = r.argmax;
    out.attaining_polynomial = reflection(r.argmax);
  }
  out.notes = "p=2 via reflections and +-(x^2+y^2); f_{q,p} maxima at p=2-+1e-6: " + fmt(below) +
              ", " + fmt(above);
  return out;
}

}  // namespace

ConstantResult big_K(const ExtendedExponent& q, const ExtendedExponent& p, const ScanConfig& cfg) {
  cfg.validate();
  if (p.is_infinite()) return big_K_pinf(q, cfg);
  const double pv = p.value();
  if (pv == 1.0) return big_K_p1(q, cfg);
  if (pv == 2.0) return big_K_p2(q, cfg);
  if (pv > 2.0) return big_K_pgt2(q, pv, cfg);
  return big_K_p12(q, pv, cfg);
}

ConstantResult little_k(const ExtendedExponent& q, const ExtendedExponent& p, const ScanConfig& cfg) {
  cfg.validate();
  if (q.is_finite() && q.value() != 1.0) {
    throw std::invalid_argument("little_k needs q in {1, inf}; use estimate_little_k for 1 < q < inf");
  }
  const SphereGrid grid(p, cfg.scan_points);
  const auto members = ext_coeff_ball(q, 2);
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const double n = sup_norm(members[i], grid, cfg);
    if (n > best_norm) {
      best_norm = n;
      best = i;
    }
  }
  ConstantResult out;
  out.value = 1.0 / best_norm;
  out.attaining_polynomial = members[best];
  out.method = Method::Enumerated;
  out.notes = "k' = " + fmt(best_norm) + " over " + std::to_string(members.size()) +
              " extreme points of the coefficient ball";
  return out;
}

ConstantResult estimate_little_k(const ExtendedExponent& q, const ExtendedExponent& p, int grid) {
  if (q.is_infinite() || q.value() == 1.0) {
    throw std::invalid_argument("estimate_little_k needs 1 < q < inf; use little_k");
  }
  if (grid < 16) throw std::invalid_argument("estimate_little_k needs grid >= 16");

  ScanConfig inner;
  inner.scan_points = 256;
  const SphereGrid sphere(p, inner.scan_points);

  const std::size_t rows = static_cast<std::size_t>(grid) + 1;
  struct RowBest {
    double norm = -1.0;
    int j = 0;
  };
  // Row i is the polar angle pi/2 * i/grid; every row scans the azimuth grid.
  const auto best_rows = parallel_map(rows, [&](std::size_t i) {
    RowBest rb;
    const double theta = std::numbers::pi / 2.0 * static_cast<double>(i) / grid;
    const int azimuths = (i == 0) ? 1 : grid;
    for (int j = 0; j < azimuths; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / grid;
      const std::vector<double> u{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                  std::cos(theta)};
      const double nq = coeff_norm(u, q);
      const HomogeneousPoly2 poly{u[0] / nq, u[1] / nq, u[2] / nq};
      const double n = sup_norm(poly, sphere, inner);
      if (n > rb.norm) {
        rb.norm = n;
        rb.j = j;
      }
    }
    return rb;
  });

  std::size_t bi = 0;
  for (std::size_t i = 1; i < rows; ++i) {
    if (best_rows[i].norm > best_rows[bi].norm) bi = i;
  }
  const double theta = std::numbers::pi / 2.0 * static_cast<double>(bi) / grid;
  const double phi = 2.0 * std::numbers::pi * best_rows[bi].j / grid;
  const std::vector<double> u{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                              std::cos(theta)};
  const double nq = coeff_norm(u, q);

  ConstantResult out;
  out.value = 1.0 / best_rows[bi].norm;
  out.attaining_polynomial = HomogeneousPoly2{u[0] / nq, u[1] / nq, u[2] / nq};
  out.method = Method::Estimated;
  out.notes = "grid " + std::to_string(grid) + "x" + std::to_string(grid) +
              " over the |.|_q sphere; upper estimate of k";
  return out;
}

ExtendedExponent hl_exponent(const ExtendedExponent& p) {
  if (p.is_infinite()) return ExtendedExponent(4.0 / 3.0);
  const double pv = p.value();
  if (!(pv > 2.0)) throw std::invalid_argument("Hardy-Littlewood constants need p > 2");
  if (pv <= 4.0) return ExtendedExponent(pv / (pv - 2.0));
  return ExtendedExponent(4.0 * pv / (3.0 * pv - 4.0));
}

ConstantResult hl_constant(const ExtendedExponent& p, const ScanConfig& cfg) {
  const auto q = hl_exponent(p);
  auto out = big_K(q, p, cfg);
  std::string regime;
  if (p.is_infinite()) {
    regime = "D_{R,2}(2) (p = inf, q = 4/3)";
  } else if (p.value() < 4.0) {
    regime = "C_{R,2,p}(2), q = p/(p-2) = " + fmt(q.value());
  } else if (p.value() == 4.0) {
    regime = "C_{R,2,4}(2) = D_{R,2,4}(2), q = 2";
  } else {
    regime = "D_{R,2,p}(2), q = 4p/(3p-4) = " + fmt(q.value());
  }
  out.notes = regime + "; " + out.notes;
  return out;
}

PhiPsi phi_psi(double p, const ScanConfig& cfg) {
  if (!(p >= 4.0) || !std::isfinite(p)) throw std::invalid_argument("phi_psi needs finite p >= 4");
  const auto phi = maximize(Objective::make_phi_diag(p), 0.0, 1.0, cfg);
  const ExtendedExponent q(4.0 * p / (3.0 * p - 4.0));
  const auto psi = maximize(Objective::make_fqp(q, p), 0.0, 1.0, cfg);
  return PhiPsi{phi.value, psi.value, phi.argmax, psi.argmax};
}

double baseline_bound(int m, double p) {
  if (m < 2) throw std::invalid_argument("baseline_bound needs m >= 2");
  if (!(p >= 2.0 * m) || !std::isfinite(p)) throw std::invalid_argument("baseline_bound needs 2m <= p < inf");
  const double md = m;
  const double e = (md * md * p + 10.0 * md - p - 6.0 * md * md - 4.0) / (4.0 * md * p);
  return std::exp2(e);
}

namespace {

ConstantResult power_scan(int m, const ScanConfig& cfg, bool absolute) {
  if (m < 1) throw std::invalid_argument("power bounds need m >= 1");
  const ExtendedExponent p(4.0 * m);
  auto member = [&](double alpha) {
    auto poly = ext_supp(p, alpha, GrecuFamily::II, +1);
    if (!absolute) return poly;
    std::vector<double> c(poly.coeffs().begin(), poly.coeffs().end());
    for (auto& x : c) x = std::abs(x);
    return HomogeneousPoly2(std::move(c));
  };
  const auto r = maximize([&](double alpha) { return l2_of_power(member(alpha), m).log_magnitude; },
                          0.0, 1.0, cfg);
  ConstantResult out;
  out.scaled = ScaledLogValue{r.value, 2 * m};
  out.value = out.scaled->value();
  out.attaining_parameter = r.argmax;
  out.attaining_polynomial = member(r.argmax);
  out.method = Method::Optimized;
  return out;
}

}  // namespace

ConstantResult power_lower_bound(int m, const ScanConfig& alpha_cfg) {
  auto out = power_scan(m, alpha_cfg, false);
  out.notes = "|P^m|_2 with P in family (ii), p = " + std::to_string(4 * m) + ", degree " +
              std::to_string(2 * m) + "; per-degree ratio " + fmt(out.scaled->per_degree_ratio());
  return out;
}

ConstantResult absolute_power_variant(int m, const ScanConfig& alpha_cfg) {
  auto out = power_scan(m, alpha_cfg, true);
  const ExtendedExponent p(4.0 * m);
  const double q_norm = sup_norm(*out.attaining_polynomial, p);
  const double corrected = std::exp((out.scaled->log_magnitude - m * std::log(q_norm)) / (2.0 * m));
  out.method = Method::Estimated;
  out.notes = "NOT a valid bound: |Q|_{" + std::to_string(4 * m) + "} sup-norm of the absolute-value "
              "polynomial is " + fmt(q_norm) + "; corrected per-degree ratio " + fmt(corrected);
  return out;
}

HomogeneousPoly2 degree5_asymmetric_polynomial() {
  return HomogeneousPoly2{0.000007233947, 0.607036736710, -0.000044725373,
                          -0.982210559287, 0.0000283144953, 0.1875854561207};
}

HomogeneousPoly2 degree5_symmetric_polynomial(double a, double b, double c) {
  return HomogeneousPoly2{a, -b, -c, c, b, -a};
}

}  // namespace polyconst

namespace polyconst {

namespace {

double degree5_ratio(const HomogeneousPoly2& poly, const SphereGrid& grid, const ScanConfig& cfg) {
  return coeff_norm(poly, ExtendedExponent(2.0)) / sup_norm(poly, grid, cfg);
}

// Compass search on the scale-invariant ratio over (a, b, c).
std::array<double, 3> compass_search(std::array<double, 3> x, const SphereGrid& grid, const ScanConfig& cfg,
                                     double& best) {
  auto eval = [&](const std::array<double, 3>& v) {
    return degree5_ratio(degree5_symmetric_polynomial(v[0], v[1], v[2]), grid, cfg);
  };
  best = eval(x);
  for (double step = 0.1; step > 1e-8;) {
    bool moved = false;
    for (int i = 0; i < 3 && !moved; ++i) {
      for (double dir : {1.0, -1.0}) {
        auto y = x;
        y[i] += dir * step;
        const double v = eval(y);
        if (v > best) {
          best = v;
          x = y;
          moved = true;
          break;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return x;
}

}  // namespace

Degree5Showcase showcase_degree5(const ScanConfig& cfg) {
  const ExtendedExponent p(10.0);
  const SphereGrid grid(p, cfg.scan_points);
  Degree5Showcase out;

  const auto asym = degree5_asymmetric_polynomial();
  out.asymmetric.value = degree5_ratio(asym, grid, cfg);
  out.asymmetric.attaining_polynomial = asym;
  out.asymmetric.method = Method::ClosedForm;
  out.asymmetric.notes = "|P|_2 / ||P||_10, listed asymmetric coefficients";

  const auto sym = degree5_symmetric_polynomial(0.19462, 0.66008, 0.97833);
  out.symmetric_listed.value = degree5_ratio(sym, grid, cfg);
  out.symmetric_listed.attaining_polynomial = sym;
  out.symmetric_listed.method = Method::ClosedForm;
  out.symmetric_listed.notes = "|P_5|_2 / ||P_5||_10 with (a, b, c) = (0.19462, 0.66008, 0.97833)";

  const ScanConfig search_cfg{512, cfg.refine_tol, cfg.refine_iters_max};
  const SphereGrid search_grid(p, search_cfg.scan_points);
  const std::array<std::array<double, 3>, 4> starts{{
      {0.19462, 0.66008, 0.97833}, {0.5, 0.5, 0.5}, {0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}}};
  double best = -1.0;
  std::array<double, 3> best_x{};
  for (const auto& s : starts) {
    double v = 0.0;
    const auto x = compass_search(s, search_grid, search_cfg, v);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  const double scale = std::max({std::abs(best_x[0]), std::abs(best_x[1]), std::abs(best_x[2])});
  const auto opt = degree5_symmetric_polynomial(best_x[0] / scale, best_x[1] / scale, best_x[2] / scale);
  out.symmetric_optimized.value = degree5_ratio(opt, grid, cfg);
  out.symmetric_optimized.attaining_polynomial = opt;
  out.symmetric_optimized.method = Method::Optimized;
  out.symmetric_optimized.notes = "compass search over (a, b, c), 4 starts, normalized to max |coefficient| = 1";
  return out;
}

}  // namespace polyconst
