#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "polyconst/exponent.hpp"
#include "polyconst/polynomial.hpp"
#include "polyconst/sphere.hpp"
#include "polyconst/sup_norm.hpp"
#include "support.hpp"

using namespace polyconst;
using testing_support::Rng;

namespace {

const ExtendedExponent kInf = ExtendedExponent::infinity();

// Plain long-double expansion of P^k by repeated multiplication, no scaling.
std::vector<long double> naive_power(const HomogeneousPoly2& p, int k) {
  std::vector<long double> acc{1.0L};
  for (int i = 0; i < k; ++i) {
    std::vector<long double> next(acc.size() + p.coeffs().size() - 1, 0.0L);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < p.coeffs().size(); ++b) next[a + b] += acc[a] * p.coeffs()[b];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("exponent parsing") {
  CHECK(parse_exponent("inf").is_infinite());
  CHECK(parse_exponent("4/3").value() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(parse_exponent("1.75").value() == 1.75);
  CHECK(parse_exponent("2").conjugate().value() == 2.0);
  CHECK(parse_exponent("1").conjugate().is_infinite());
  CHECK_THROWS_AS(parse_exponent("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponent("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponent("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedExponent(std::nan("")), std::invalid_argument);
  CHECK(to_string(ExtendedExponent(1.5)) == "1.5");
  CHECK(to_string(kInf) == "inf");
}

TEST_CASE("evaluate") {
  CHECK(evaluate(HomogeneousPoly2{1, 1, 1}, 1, 1) == 3.0);
  CHECK(evaluate(HomogeneousPoly2{0, 4, 0}, 0.5, 0.5) == 1.0);
  for (double t : {-2.0, -0.3, 0.0, 0.7, 5.0}) CHECK(evaluate(HomogeneousPoly2{1, 0, -1}, t, t) == 0.0);
  CHECK(evaluate(HomogeneousPoly2::zero(3), 0.4, -1.1) == 0.0);
  CHECK(evaluate(HomogeneousPoly2{2.5}, 3.0, 4.0) == 2.5);

  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = rng.poly(rng.integer(0, 7));
    const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2), lam = rng.uniform(-3, 3);
    double direct = 0.0;
    const int m = p.degree();
    for (int k = 0; k <= m; ++k) direct += p[k] * std::pow(x, m - k) * std::pow(y, k);
    CHECK(evaluate(p, x, y) == doctest::Approx(direct).epsilon(1e-12).scale(10));
    CHECK(evaluate(p, lam * x, lam * y) ==
          doctest::Approx(std::pow(lam, m) * evaluate(p, x, y)).epsilon(1e-12).scale(10));
  }
}

TEST_CASE("coeff_norm") {
  const HomogeneousPoly2 p{1, 2, -1};
  CHECK(coeff_norm(p, ExtendedExponent(1)) == 4.0);
  CHECK(coeff_norm(p, kInf) == 2.0);
  CHECK(coeff_norm(p, ExtendedExponent(2)) == doctest::Approx(2.449489743).epsilon(1e-10));
  CHECK(coeff_norm(HomogeneousPoly2::zero(4), ExtendedExponent(3)) == 0.0);
  CHECK(coeff_norm(HomogeneousPoly2{1e-200, 1e-200}, ExtendedExponent(2)) ==
        doctest::Approx(std::sqrt(2.0) * 1e-200).epsilon(1e-12));
  CHECK(coeff_norm(HomogeneousPoly2{1e200, 1e200}, ExtendedExponent(2)) ==
        doctest::Approx(std::sqrt(2.0) * 1e200).epsilon(1e-12));
}

TEST_CASE("coeff_norm axioms and monotonicity in q") {
  Rng rng(12);
  const double qs[] = {1.0, 4.0 / 3.0, 1.5, 2.0, 3.0, 10.0};
  for (int i = 0; i < 300; ++i) {
    const int m = rng.integer(1, 6);
    const auto a = rng.poly(m), b = rng.poly(m);
    const double lam = rng.uniform(-5, 5);
    double prev = std::numeric_limits<double>::infinity();
    for (double qv : qs) {
      const ExtendedExponent q(qv);
      CHECK(coeff_norm(a * lam, q) == doctest::Approx(std::abs(lam) * coeff_norm(a, q)).epsilon(1e-12));
      auto s = a;
      s += b;
      CHECK(coeff_norm(s, q) <= coeff_norm(a, q) + coeff_norm(b, q) + 1e-12);
      const double v = coeff_norm(a, q);
      CHECK(v <= prev + 1e-15);
      prev = v;
    }
    CHECK(coeff_norm(a, kInf) <= prev + 1e-15);
  }
}

TEST_CASE("sphere_point") {
  auto pt = sphere_point(ExtendedExponent(2), 0.0, Branch::Plus);
  CHECK(pt.x == 0.0);
  CHECK(pt.y == 1.0);
  pt = sphere_point(ExtendedExponent(1), 0.5, Branch::Plus);
  CHECK(pt.y == doctest::Approx(0.5).epsilon(1e-15));
  const double d = std::pow(2.0, -0.25);
  pt = sphere_point(ExtendedExponent(4), d, Branch::Plus);
  CHECK(pt.y == doctest::Approx(d).epsilon(1e-14));
  pt = sphere_point(ExtendedExponent(3.5), 1.0, Branch::Minus);
  CHECK(pt.x == 1.0);
  CHECK(pt.y == 0.0);
  CHECK_THROWS_AS(sphere_point(ExtendedExponent(2), 1.5, Branch::Plus), std::invalid_argument);
  CHECK_THROWS_AS(sphere_edge_point(ExtendedExponent(2), 4, 0.0), std::invalid_argument);

  Rng rng(13);
  for (double pv : {1.0, 1.2, 1.5, 2.0, 3.0, 8.0, 40.0}) {
    const ExtendedExponent p(pv);
    for (int i = 0; i < 200; ++i) {
      const double t = rng.uniform(-1, 1);
      const auto s = sphere_point(p, t, i % 2 ? Branch::Plus : Branch::Minus);
      CHECK(std::pow(std::abs(s.x), pv) + std::pow(std::abs(s.y), pv) == doctest::Approx(1.0).epsilon(1e-14));
      for (int e = 0; e < 4; ++e) {
        const auto q = sphere_edge_point(p, e, t * edge_half_width(p));
        CHECK(std::pow(std::abs(q.x), pv) + std::pow(std::abs(q.y), pv) == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
  }
  for (int e = 0; e < 4; ++e) {
    const auto q = sphere_edge_point(kInf, e, rng.uniform(-1, 1));
    CHECK(std::max(std::abs(q.x), std::abs(q.y)) == 1.0);
  }
}

TEST_CASE("four edges cover the sphere") {
  // Every point of the l_p sphere has a preimage on some edge.
  Rng rng(14);
  for (double pv : {1.0, 1.5, 3.0, 10.0}) {
    const ExtendedExponent p(pv);
    const double d = edge_half_width(p);
    for (int i = 0; i < 200; ++i) {
      const double th = rng.uniform(0, 2 * std::numbers::pi);
      const double c = std::cos(th), s = std::sin(th);
      const double r = std::pow(std::pow(std::abs(c), pv) + std::pow(std::abs(s), pv), 1.0 / pv);
      const double x = c / r, y = s / r;
      bool found = false;
      for (int e = 0; e < 4 && !found; ++e) {
        const double t = e < 2 ? x : y;
        if (std::abs(t) > d) continue;
        const auto q = sphere_edge_point(p, e, t);
        found = std::abs(q.x - x) < 1e-12 && std::abs(q.y - y) < 1e-12;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("sup_norm examples") {
  for (const char* p : {"1", "1.5", "2", "3", "7", "inf"})
    CHECK(sup_norm(HomogeneousPoly2{1, 0, 0}, parse_exponent(p)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_norm(HomogeneousPoly2{0, 4, 0}, ExtendedExponent(1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_norm(HomogeneousPoly2{1, 1, 1}, kInf) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sup_norm(HomogeneousPoly2{1, 0, 1}, ExtendedExponent(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_norm(HomogeneousPoly2::zero(2), ExtendedExponent(3)) == 0.0);
  CHECK_THROWS_AS(sup_norm(HomogeneousPoly2{1, 0, 0}, ExtendedExponent(2), ScanConfig{32, 1e-12, 200}),
                  std::invalid_argument);
}

TEST_CASE("sup_norm axioms") {
  Rng rng(15);
  for (const char* ps : {"1", "1.5", "3", "inf"}) {
    const auto p = parse_exponent(ps);
    const SphereGrid grid(p, 1024);
    for (int i = 0; i < 60; ++i) {
      const int m = rng.integer(2, 5);
      const auto a = rng.poly(m), b = rng.poly(m);
      const double lam = rng.uniform(-4, 4);
      const double na = sup_norm(a, grid), nb = sup_norm(b, grid);
      CHECK(sup_norm(a * lam, grid) == doctest::Approx(std::abs(lam) * na).epsilon(1e-12));
      auto s = a;
      s += b;
      CHECK(sup_norm(s, grid) <= na + nb + 1e-12);
      CHECK(na <= coeff_norm(a, ExtendedExponent(1)) + 1e-12);
    }
  }
}

TEST_CASE("power examples") {
  auto r = power(HomogeneousPoly2{1, 0, 1}, 2);
  auto c = r.normalized * std::exp(r.scale.log_magnitude);
  CHECK(c.degree() == 4);
  CHECK(c[0] == doctest::Approx(1));
  CHECK(c[2] == doctest::Approx(2));
  CHECK(c[4] == doctest::Approx(1));
  CHECK(c[1] == 0.0);
  r = power(HomogeneousPoly2{0, 1, 0}, 3);
  c = r.normalized * std::exp(r.scale.log_magnitude);
  CHECK(c.degree() == 6);
  CHECK(c[3] == doctest::Approx(1));
  CHECK(coeff_norm(c, ExtendedExponent(1)) == doctest::Approx(1));
  r = power(HomogeneousPoly2{1, 0, -1}, 2);
  c = r.normalized * std::exp(r.scale.log_magnitude);
  CHECK(c[2] == doctest::Approx(-2));
  CHECK_THROWS_AS(power(HomogeneousPoly2{1, 0, 1}, 0), std::invalid_argument);
  CHECK(std::isinf(power(HomogeneousPoly2::zero(2), 3).scale.log_magnitude));
}

TEST_CASE("l2_of_power examples") {
  for (int k : {1, 2, 7, 50}) CHECK(l2_of_power(HomogeneousPoly2{1, 0, 0}, k).per_degree_ratio() == doctest::Approx(1.0));
  const auto v = l2_of_power(HomogeneousPoly2{0, std::sqrt(2.0), 0}, 2);
  CHECK(v.degree == 4);
  CHECK(v.value() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(v.per_degree_ratio() == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
}

TEST_CASE("l2_of_power against direct expansion") {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const auto p = rng.poly(rng.integer(1, 4), 3.0);
    const int k = rng.integer(1, 5);
    const auto direct = naive_power(p, k);
    long double s = 0;
    for (auto x : direct) s += x * x;
    const auto v = l2_of_power(p, k);
    CHECK(testing_support::rel_err(v.value(), static_cast<double>(std::sqrt(s))) < 1e-10);
    const auto pw = power(p, k);
    for (std::size_t j = 0; j < direct.size(); ++j)
      CHECK(pw.normalized[static_cast<int>(j)] * std::exp(pw.scale.log_magnitude) ==
            doctest::Approx(static_cast<double>(direct[j])).epsilon(1e-10).scale(1e-300 + std::abs(double(s))));
  }
}

TEST_CASE("ScaledLogValue") {
  const auto v = ScaledLogValue::from_value(9.0, 2);
  CHECK(v.per_degree_ratio() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::exp(v.log_magnitude / v.degree) == doctest::Approx(v.per_degree_ratio()).epsilon(1e-12));
  const auto big = l2_of_power(HomogeneousPoly2{5.0, 9.0, -7.0}, 400);
  CHECK(big.degree == 800);
  CHECK(std::isfinite(big.log_magnitude));
  CHECK(std::isinf(big.value()));
  CHECK(std::isfinite(big.per_degree_ratio()));
}

TEST_CASE("sup-norm of a power is the power of the sup-norm") {
  Rng rng(17);
  for (const char* ps : {"1", "2", "3", "8", "inf"}) {
    const auto p = parse_exponent(ps);
    for (int i = 0; i < 10; ++i) {
      const auto a = rng.poly(2);
      const double n = sup_norm(a, p);
      for (int k = 2; k <= 4; ++k) {
        const auto pw = power(a, k);
        const double nk = sup_norm(pw.normalized, p) * std::exp(pw.scale.log_magnitude);
        CHECK(nk == doctest::Approx(std::pow(n, k)).epsilon(1e-8));
      }
    }
  }
}
