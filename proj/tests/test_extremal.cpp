#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "polyconst/extremal.hpp"
#include "polyconst/sup_norm.hpp"
#include "support.hpp"

using namespace polyconst;
using testing_support::Rng;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

void check_coeffs(const HomogeneousPoly2& p, std::initializer_list<double> want, double tol = 1e-14) {
  REQUIRE(p.coeffs().size() == want.size());
  int k = 0;
  for (double w : want) CHECK(p[k++] == doctest::Approx(w).epsilon(tol).scale(1.0));
}

}  // namespace

TEST_CASE("Choi-Kim-Ki examples (p = 1)") {
  check_coeffs(ext_sup1_b(4.0), {0, 4, 0});
  check_coeffs(ext_sup1_b(2.0 + kSqrt2), {kSqrt2 / 2, 2 + kSqrt2, -kSqrt2 / 2});
  check_coeffs(ext_sup1_b(-3.0, -1), {-std::sqrt(3.0) / 2, -3, std::sqrt(3.0) / 2});
  const auto a = ext_sup1_a({1, 1, 1});
  check_coeffs(a, {1, 2, 1});
  CHECK(sup_norm(a, ExtendedExponent(1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ext_sup1_a_all().size() == 8);
  CHECK_THROWS_AS(ext_sup1_b(2.0), std::invalid_argument);
  CHECK_THROWS_AS(ext_sup1_b(4.5), std::invalid_argument);
  CHECK_THROWS_AS(ext_sup1_b(1.0), std::invalid_argument);
}

TEST_CASE("Choi-Kim examples (p = inf)") {
  check_coeffs(ext_supinf_c(0.5), {0.5, 1, -0.5});
  check_coeffs(ext_supinf_c(1.0), {1, 0, -1});
  const double t = (2 + kSqrt2) / 4;
  CHECK(ext_supinf_c(t)[1] == doctest::Approx(kSqrt2 / 2).epsilon(1e-14));
  check_coeffs(ext_supinf_c(0.8, -1, -1), {-0.8, 0.8, 0.8});
  check_coeffs(ext_supinf_axis(true, -1), {-1, 0, 0});
  check_coeffs(ext_supinf_axis(false, 1), {0, 0, 1});
  CHECK_THROWS_AS(ext_supinf_c(0.4), std::invalid_argument);
  CHECK_THROWS_AS(ext_supinf_c(1.01), std::invalid_argument);
}

TEST_CASE("Grecu examples") {
  const ExtendedExponent p4(4);
  check_coeffs(ext_supp(p4, 1.0, GrecuFamily::II), {1, 0, -1});
  check_coeffs(ext_supp(p4, std::pow(2.0, -0.25), GrecuFamily::II), {0, kSqrt2, 0}, 1e-13);
  check_coeffs(ext_supp(p4, 1.0, GrecuFamily::I), {1, 0, 0});
  CHECK(sup_norm(ext_supp(p4, std::pow(2.0, -0.25), GrecuFamily::II), p4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(ext_supp(p4, 0.5, GrecuFamily::III), std::invalid_argument);
  CHECK_THROWS_AS(ext_supp(p4, 1.2, GrecuFamily::II), std::invalid_argument);
  CHECK_THROWS_AS(ext_supp(p4, -0.1, GrecuFamily::II), std::invalid_argument);
  CHECK_THROWS_AS(ext_supp(ExtendedExponent(2), 0.5, GrecuFamily::II), std::invalid_argument);
  CHECK_THROWS_AS(ext_supp(ExtendedExponent(1), 0.5, GrecuFamily::II), std::invalid_argument);
  CHECK_THROWS_AS(ext_supp(ExtendedExponent::infinity(), 0.5, GrecuFamily::II), std::invalid_argument);
}

TEST_CASE("coefficient-ball extreme points") {
  const auto b1 = ext_coeff_ball(ExtendedExponent(1), 2);
  CHECK(b1.size() == 6);
  const auto binf = ext_coeff_ball(ExtendedExponent::infinity(), 2);
  CHECK(binf.size() == 8);
  bool has_all_plus = false;
  for (const auto& p : binf) has_all_plus |= (p[0] == 1 && p[1] == 1 && p[2] == 1);
  CHECK(has_all_plus);
  CHECK(ext_coeff_ball(ExtendedExponent::infinity(), 1).size() == 4);
  for (int m = 1; m <= 6; ++m) {
    const auto a = ext_coeff_ball(ExtendedExponent(1), m);
    const auto b = ext_coeff_ball(ExtendedExponent::infinity(), m);
    CHECK(a.size() == static_cast<std::size_t>(2 * (m + 1)));
    CHECK(b.size() == (std::size_t{1} << (m + 1)));
    std::set<std::vector<double>> distinct;
    for (const auto& p : a) {
      CHECK(coeff_norm(p, ExtendedExponent(1)) == 1.0);
      distinct.insert({p.coeffs().begin(), p.coeffs().end()});
    }
    for (const auto& p : b) {
      CHECK(coeff_norm(p, ExtendedExponent::infinity()) == 1.0);
      distinct.insert({p.coeffs().begin(), p.coeffs().end()});
    }
    CHECK(distinct.size() == a.size() + b.size() - (m == 0 ? 2 : 0));
  }
  CHECK_THROWS_AS(ext_coeff_ball(ExtendedExponent(2), 2), std::invalid_argument);
}

TEST_CASE("family catalogue") {
  auto tags = [](BallKind b, const char* e) {
    std::set<std::string> s;
    for (const auto& f : extreme_families(b, parse_exponent(e))) s.insert(f.sub_family);
    return s;
  };
  CHECK(tags(BallKind::SupNorm, "1") == std::set<std::string>{"CKK-a", "CKK-b"});
  CHECK(tags(BallKind::SupNorm, "inf") == std::set<std::string>{"CK-a/b", "CK-c"});
  CHECK(tags(BallKind::SupNorm, "3") == std::set<std::string>{"Grecu-i", "Grecu-ii"});
  CHECK(tags(BallKind::SupNorm, "1.5") == std::set<std::string>{"Grecu-i", "Grecu-ii", "Grecu-iii"});
  CHECK(tags(BallKind::CoeffNorm, "1") == std::set<std::string>{"coeff-basis"});
  CHECK(tags(BallKind::CoeffNorm, "inf") == std::set<std::string>{"coeff-signs"});
  for (const auto& f : extreme_families(BallKind::SupNorm, ExtendedExponent(1)))
    if (f.parameter_range) {
      CHECK(f.parameter_range->lo_open);
      CHECK_FALSE(f.parameter_range->contains(2.0));
      CHECK(f.parameter_range->contains(4.0));
    }
}

TEST_CASE("unit-norm certification") {
  Rng rng(21);
  const int n = 200;
  const ExtendedExponent p1(1), pinf = ExtendedExponent::infinity();
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 + 2.0 * (i + 1) / n;
    CHECK(sup_norm(ext_sup1_b(t, i % 2 ? 1 : -1), p1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sup_norm(ext_sup1_b(-t), p1) == doctest::Approx(1.0).epsilon(1e-10));
    const double s = 0.5 + 0.5 * i / (n - 1);
    CHECK(sup_norm(ext_supinf_c(s, 1, i % 2 ? 1 : -1), pinf) == doctest::Approx(1.0).epsilon(1e-10));
  }
  for (const auto& a : ext_sup1_a_all()) CHECK(sup_norm(a, p1) == doctest::Approx(1.0).epsilon(1e-10));
  for (bool ax : {true, false})
    for (int sg : {1, -1}) CHECK(sup_norm(ext_supinf_axis(ax, sg), pinf) == doctest::Approx(1.0).epsilon(1e-10));

  for (double pv : {3.0, 4.0, 8.0}) {
    const ExtendedExponent p(pv);
    for (int i = 0; i < n; ++i) {
      const double a = rng.uniform();
      for (auto fam : {GrecuFamily::I, GrecuFamily::II})
        CHECK(sup_norm(ext_supp(p, a, fam, i % 2 ? 1 : -1), p) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  const ExtendedExponent p15(1.5);
  const SphereGrid grid(p15, 4096);
  for (int i = 0; i < n; ++i) {
    const double a = rng.uniform();
    for (auto fam : {GrecuFamily::I, GrecuFamily::II, GrecuFamily::III})
      CHECK(sup_norm(ext_supp(p15, a, fam, 1, grid), grid) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("family (ii) under the alpha-beta swap") {
  Rng rng(22);
  for (double pv : {1.5, 3.0, 6.0}) {
    const ExtendedExponent p(pv);
    for (int i = 0; i < 100; ++i) {
      // Away from a = 0, where recovering a from b loses digits.
      const double a = rng.uniform(0.2, 1.0);
      const double b = sphere_complement(p, a);
      const auto P = ext_supp(p, a, GrecuFamily::II);
      const auto Q = ext_supp(p, b, GrecuFamily::II);
      CHECK(Q[0] == doctest::Approx(-P[0]).epsilon(1e-9).scale(1));
      CHECK(Q[2] == doctest::Approx(-P[2]).epsilon(1e-9).scale(1));
      CHECK(Q[1] == doctest::Approx(P[1]).epsilon(1e-9).scale(1));
      for (double q : {1.0, 4.0 / 3.0, 2.0})
        CHECK(coeff_norm(Q, ExtendedExponent(q)) == doctest::Approx(coeff_norm(P, ExtendedExponent(q))).epsilon(1e-9));
    }
  }
}

TEST_CASE("family (iii) raw form is not unit norm near the diagonal") {
  // The closed form divides by a^2 - b^2 with a numerator that does not vanish there.
  const double p = 1.5;
  const double d = std::pow(0.5, 1.0 / p);
  const auto near = ext_supp_iii_raw(p, d - 1e-3);
  CHECK(sup_norm(near, ExtendedExponent(p)) > 10.0);
}
