#ifndef POLYCONST_POLYNOMIAL_HPP
#define POLYCONST_POLYNOMIAL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyconst/exponent.hpp"

namespace polyconst {

/// A degree-m homogeneous polynomial on R^2,
///
///     P(x, y) = sum_{k=0}^{m} c[k] x^{m-k} y^k,
///
/// stored as its m+1 monomial coefficients. All coefficients are finite.
class HomogeneousPoly2 {
 public:
  /// Throws std::invalid_argument on an empty vector or a non-finite entry.
  explicit HomogeneousPoly2(std::vector<double> coeffs);
  HomogeneousPoly2(std::initializer_list<double> coeffs)
      : HomogeneousPoly2(std::vector<double>(coeffs)) {}

  static HomogeneousPoly2 zero(int degree);
  /// c * x^{m-k} y^k
  static HomogeneousPoly2 monomial(int degree, int k, double c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_.at(k); }
  bool is_zero() const noexcept;

  HomogeneousPoly2 operator-() const;
  HomogeneousPoly2& operator*=(double s);
  /// Degrees must match.
  HomogeneousPoly2& operator+=(const HomogeneousPoly2& other);

  friend HomogeneousPoly2 operator*(HomogeneousPoly2 p, double s) { return p *= s; }
  friend HomogeneousPoly2 operator*(double s, HomogeneousPoly2 p) { return p *= s; }
  friend HomogeneousPoly2 operator+(HomogeneousPoly2 a, const HomogeneousPoly2& b) { return a += b; }
  friend bool operator==(const HomogeneousPoly2&, const HomogeneousPoly2&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Evaluates P(x, y) by Horner's rule in the ratio of the smaller to the
/// larger coordinate, then scales by the larger coordinate to the m-th power.
double evaluate(const HomogeneousPoly2& p, double x, double y) noexcept;

/// l_q norm of the coefficient vector; max |c_k| for q = inf.
double coeff_norm(const HomogeneousPoly2& p, const ExtendedExponent& q) noexcept;
double coeff_norm(std::span<const double> coeffs, const ExtendedExponent& q) noexcept;

/// Product of two homogeneous polynomials (coefficient convolution).
HomogeneousPoly2 multiply(const HomogeneousPoly2& a, const HomogeneousPoly2& b);

/// Overflow-safe carrier for a nonnegative quantity of a given degree:
/// value = exp(log_magnitude), reported as value^{1/degree}.
struct ScaledLogValue {
  double log_magnitude = 0.0;
  int degree = 1;

  double per_degree_ratio() const noexcept {
    return std::exp(log_magnitude / static_cast<double>(degree));
  }
  /// May be +inf when the magnitude exceeds the double range.
  double value() const noexcept { return std::exp(log_magnitude); }

  static ScaledLogValue from_value(double value, int degree);
};

/// P^k as a max-abs-normalized coefficient vector together with the log of
/// the scale that was divided out: P^k = exp(scale.log_magnitude) * normalized.
struct PowerResult {
  HomogeneousPoly2 normalized;
  ScaledLogValue scale;
};

/// Repeated convolution with renormalization after every multiply.
/// Throws std::invalid_argument for k < 1.
PowerResult power(const HomogeneousPoly2& p, int k);

/// |P^k|_2 carried in log form; degree field is k * deg(P).
ScaledLogValue l2_of_power(const HomogeneousPoly2& p, int k);

std::string to_string(const HomogeneousPoly2& p);

}  // namespace polyconst

#endif
