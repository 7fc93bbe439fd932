#ifndef POLYCONST_OBJECTIVES_HPP
#define POLYCONST_OBJECTIVES_HPP

#include "polyconst/exponent.hpp"
#include "polyconst/extremal.hpp"

namespace polyconst {

// Closed-form |P_t|_q along the one-parameter extreme families. Each is a
// direct transcription of the formula, independent of the generators in
// extremal.hpp; the two are compared in the tests. For q = inf each returns
// the largest coefficient magnitude. Endpoint powers of zero are taken as
// their limits by explicit branch.

/// (2^{1-q} (4t - t^2)^{q/2} + t^q)^{1/q} on t in [2, 4].
double f_q1(const ExtendedExponent& q, double t);

/// (2 t^q + 2^q t^{q/2} (1 - t)^{q/2})^{1/q} on t in [1/2, 1].
double f_qinf(const ExtendedExponent& q, double t);

/// [2 |(2t^p - 1)/D|^q + (2t s (t^{p-2} + s^{p-2}) / D)^q]^{1/q} on t in [0, 1],
/// s = (1 - t^p)^{1/p}, D = t^2 + s^2. Requires finite p > 1, p != 2; for
/// 1 < p < 2 the value is meaningful only as a conjectural objective.
double f_qp(const ExtendedExponent& q, double p, double t);

/// [a^{4p/(3p-4)} + (1 - a^{p/(p-2)})^{(4p-8)/(3p-4)}]^{(3p-4)/(4p)} on a in [0, 1], p >= 4.
double phi_diag(double p, double a);

/// |a x^2 + c y^2|_q with c = (1 - a^r)^{1/r}, r = p/(p-2): the family (i)
/// objective for general q and p > 2. phi_diag is the q = 4p/(3p-4) case.
double diag_objective(const ExtendedExponent& q, double p, double a);

enum class ObjectiveKind { FQ1, FQInf, FQP, PhiDiag };

/// A bound objective: kind, exponents and the interval it is defined on.
struct Objective {
  ObjectiveKind kind;
  ExtendedExponent q;
  ExtendedExponent p;
  Interval domain;

  static Objective make_fq1(const ExtendedExponent& q);
  static Objective make_fqinf(const ExtendedExponent& q);
  static Objective make_fqp(const ExtendedExponent& q, double p);
  static Objective make_phi_diag(double p);

  double operator()(double t) const;
  /// True for f_qp with 1 < p < 2.
  bool conjectural() const noexcept;
};

}  // namespace polyconst

#endif
