#include "polyconst/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polyconst {

HomogeneousPoly2::HomogeneousPoly2(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("polynomial coefficient is not finite");
  }
}

HomogeneousPoly2 HomogeneousPoly2::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return HomogeneousPoly2(std::vector<double>(static_cast<std::size_t>(degree) + 1, 0.0));
}

HomogeneousPoly2 HomogeneousPoly2::monomial(int degree, int k, double c) {
  if (k < 0 || k > degree) throw std::invalid_argument("monomial index out of range");
  auto p = zero(degree);
  p.coeffs_[static_cast<std::size_t>(k)] = c;
  if (!std::isfinite(c)) throw std::invalid_argument("polynomial coefficient is not finite");
  return p;
}

bool HomogeneousPoly2::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

HomogeneousPoly2 HomogeneousPoly2::operator-() const {
  auto r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

HomogeneousPoly2& HomogeneousPoly2::operator*=(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("non-finite scale factor");
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HomogeneousPoly2& HomogeneousPoly2::operator+=(const HomogeneousPoly2& other) {
  if (other.degree() != degree()) throw std::invalid_argument("degree mismatch in polynomial sum");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

double evaluate(const HomogeneousPoly2& p, double x, double y) noexcept {
  const auto c = p.coeffs();
  const int m = p.degree();
  if (m == 0) return c[0];
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ax == 0.0 && ay == 0.0) return 0.0;

  double acc = 0.0;
  double lead = 0.0;
  if (ax >= ay) {
    // x^m * sum c_k r^k, r = y/x
    const double r = y / x;
    for (int k = m; k >= 0; --k) acc = acc * r + c[static_cast<std::size_t>(k)];
    lead = x;
  } else {
    // y^m * sum c_k s^{m-k}, s = x/y
    const double s = x / y;
    for (int k = 0; k <= m; ++k) acc = acc * s + c[static_cast<std::size_t>(k)];
    lead = y;
  }
  double scale = 1.0;
  for (int i = 0; i < m; ++i) scale *= lead;
  return acc * scale;
}

double coeff_norm(std::span<const double> coeffs, const ExtendedExponent& q) noexcept {
  if (q.is_infinite()) {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }
  const double qv = q.value();
  if (qv == 1.0) {
    double s = 0.0;
    for (double c : coeffs) s += std::abs(c);
    return s;
  }
  // Scale by the largest entry so |c/M|^q never overflows or underflows wholesale.
  double mx = 0.0;
  for (double c : coeffs) mx = std::max(mx, std::abs(c));
  if (mx == 0.0) return 0.0;
  double s = 0.0;
  if (qv == 2.0) {
    for (double c : coeffs) {
      const double r = c / mx;
      s += r * r;
    }
    return mx * std::sqrt(s);
  }
  for (double c : coeffs) s += std::pow(std::abs(c) / mx, qv);
  return mx * std::pow(s, 1.0 / qv);
}

double coeff_norm(const HomogeneousPoly2& p, const ExtendedExponent& q) noexcept {
  return coeff_norm(p.coeffs(), q);
}

namespace {

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j];
  }
  return out;
}

}  // namespace

HomogeneousPoly2 multiply(const HomogeneousPoly2& a, const HomogeneousPoly2& b) {
  return HomogeneousPoly2(convolve(a.coeffs(), b.coeffs()));
}

ScaledLogValue ScaledLogValue::from_value(double value, int degree) {
  if (degree < 1) throw std::invalid_argument("ScaledLogValue degree must be positive");
  if (!(value >= 0.0)) throw std::invalid_argument("ScaledLogValue needs a nonnegative value");
  return ScaledLogValue{std::log(value), degree};
}

PowerResult power(const HomogeneousPoly2& p, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  const int out_degree = std::max(1, k * p.degree());

  double mx = 0.0;
  for (double c : p.coeffs()) mx = std::max(mx, std::abs(c));
  if (mx == 0.0) {
    return {HomogeneousPoly2::zero(k * p.degree()),
            ScaledLogValue{-std::numeric_limits<double>::infinity(), out_degree}};
  }

  std::vector<double> base(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : base) c /= mx;
  // Each factor of the base contributes log(mx); renormalization adds the rest.
  double log_scale = static_cast<double>(k) * std::log(mx);

  std::vector<double> acc = base;
  for (int step = 1; step < k; ++step) {
    acc = convolve(acc, base);
    double amax = 0.0;
    for (double c : acc) amax = std::max(amax, std::abs(c));
    for (auto& c : acc) c /= amax;
    log_scale += std::log(amax);
  }
  return {HomogeneousPoly2(std::move(acc)), ScaledLogValue{log_scale, out_degree}};
}

ScaledLogValue l2_of_power(const HomogeneousPoly2& p, int k) {
  auto pw = power(p, k);
  const double l2 = coeff_norm(pw.normalized, ExtendedExponent(2.0));
  return ScaledLogValue{pw.scale.log_magnitude + std::log(l2), pw.scale.degree};
}

std::string to_string(const HomogeneousPoly2& p) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << p.coeffs()[k];
  }
  os << ']';
  return os.str();
}

}  // namespace polyconst
