#include "polyconst/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyconst {

namespace {

void require_in(double t, double lo, double hi, const char* what) {
  if (!(t >= lo && t <= hi)) {
    throw std::invalid_argument(std::string(what) + ": parameter " + std::to_string(t) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

/// x^e for x >= 0 and e > 0, with 0^e = 0 exactly.
double pow0(double x, double e) { return x == 0.0 ? 0.0 : std::pow(x, e); }

/// (u^q + v^q)^{1/q} over nonnegative terms, or max(u, v) for q = inf.
double lq_pair(const ExtendedExponent& q, double u, double v, double u_weight = 1.0) {
  if (q.is_infinite()) return std::max(u, v);
  const double qv = q.value();
  return std::pow(u_weight * pow0(u, qv) + pow0(v, qv), 1.0 / qv);
}

}  // namespace

double f_q1(const ExtendedExponent& q, double t) {
  require_in(t, 2.0, 4.0, "f_q1");
  // Coefficients: two of magnitude sqrt(4t - t^2)/2 and one of magnitude t.
  const double w = t * (4.0 - t);
  if (q.is_infinite()) return std::max(0.5 * std::sqrt(w), t);
  const double qv = q.value();
  return std::pow(std::pow(2.0, 1.0 - qv) * pow0(w, qv / 2.0) + std::pow(t, qv), 1.0 / qv);
}

double f_qinf(const ExtendedExponent& q, double t) {
  require_in(t, 0.5, 1.0, "f_qinf");
  const double u = t * (1.0 - t);
  if (q.is_infinite()) return std::max(t, 2.0 * std::sqrt(u));
  const double qv = q.value();
  return std::pow(2.0 * std::pow(t, qv) + std::pow(2.0, qv) * pow0(u, qv / 2.0), 1.0 / qv);
}

double f_qp(const ExtendedExponent& q, double p, double t) {
  if (!(p > 1.0) || p == 2.0 || !std::isfinite(p)) {
    throw std::invalid_argument("f_qp needs finite p > 1 with p != 2");
  }
  require_in(t, 0.0, 1.0, "f_qp");
  const double tp = pow0(t, p);
  const double one_minus = 1.0 - tp;
  const double s = pow0(one_minus, 1.0 / p);
  const double den = t * t + pow0(one_minus, 2.0 / p);
  const double first = std::abs((2.0 * tp - 1.0) / den);
  // 2 t s (t^{p-2} + s^{p-2}) = 2 (s t^{p-1} + t s^{p-1}); the right side has no
  // negative powers, so it is finite at both ends for 1 < p < 2 as well.
  const double cross = 2.0 * (s * pow0(t, p - 1.0) + t * pow0(s, p - 1.0)) / den;
  return lq_pair(q, first, cross, 2.0);
}

double phi_diag(double p, double a) {
  if (!(p >= 4.0) || !std::isfinite(p)) throw std::invalid_argument("phi_diag needs finite p >= 4");
  require_in(a, 0.0, 1.0, "phi_diag");
  const double e1 = 4.0 * p / (3.0 * p - 4.0);
  const double e2 = (4.0 * p - 8.0) / (3.0 * p - 4.0);
  const double inner = 1.0 - pow0(a, p / (p - 2.0));
  return std::pow(pow0(a, e1) + pow0(inner, e2), (3.0 * p - 4.0) / (4.0 * p));
}

double diag_objective(const ExtendedExponent& q, double p, double a) {
  if (!(p > 2.0) || !std::isfinite(p)) throw std::invalid_argument("diag_objective needs finite p > 2");
  require_in(a, 0.0, 1.0, "diag_objective");
  const double r = p / (p - 2.0);
  const double c = pow0(1.0 - pow0(a, r), 1.0 / r);
  return lq_pair(q, a, c);
}

Objective Objective::make_fq1(const ExtendedExponent& q) {
  return Objective{ObjectiveKind::FQ1, q, ExtendedExponent(1.0), Interval{2.0, 4.0}};
}

Objective Objective::make_fqinf(const ExtendedExponent& q) {
  return Objective{ObjectiveKind::FQInf, q, ExtendedExponent::infinity(), Interval{0.5, 1.0}};
}

Objective Objective::make_fqp(const ExtendedExponent& q, double p) {
  if (!(p > 1.0) || p == 2.0 || !std::isfinite(p)) {
    throw std::invalid_argument("f_qp needs finite p > 1 with p != 2");
  }
  return Objective{ObjectiveKind::FQP, q, ExtendedExponent(p), Interval{0.0, 1.0}};
}

Objective Objective::make_phi_diag(double p) {
  if (!(p >= 4.0) || !std::isfinite(p)) throw std::invalid_argument("phi_diag needs finite p >= 4");
  const double q = 4.0 * p / (3.0 * p - 4.0);
  return Objective{ObjectiveKind::PhiDiag, ExtendedExponent(q), ExtendedExponent(p), Interval{0.0, 1.0}};
}

double Objective::operator()(double t) const {
  switch (kind) {
    case ObjectiveKind::FQ1: return f_q1(q, t);
    case ObjectiveKind::FQInf: return f_qinf(q, t);
    case ObjectiveKind::FQP: return f_qp(q, p.value(), t);
    case ObjectiveKind::PhiDiag: return phi_diag(p.value(), t);
  }
  return 0.0;
}

bool Objective::conjectural() const noexcept {
  return kind == ObjectiveKind::FQP && p.is_finite() && p.value() < 2.0;
}

}  // namespace polyconst
