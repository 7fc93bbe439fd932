#ifndef POLYCONST_EXPONENT_HPP
#define POLYCONST_EXPONENT_HPP

#include <limits>
#include <string>
#include <string_view>

namespace polyconst {

/// An exponent p or q in [1, inf]. Infinity is a distinguished value rather
/// than a large finite number, so `is_infinite()` is exact.
class ExtendedExponent {
 public:
  /// Throws std::invalid_argument for NaN or values below 1. Passing
  /// +infinity yields the infinite exponent.
  explicit ExtendedExponent(double value);

  static ExtendedExponent infinity() noexcept { return ExtendedExponent(); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The finite value, or +infinity.
  double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  /// Hölder conjugate: 1 <-> inf, otherwise v/(v-1).
  ExtendedExponent conjugate() const;

  friend bool operator==(const ExtendedExponent& a, const ExtendedExponent& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  ExtendedExponent() noexcept : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

/// Accepts "inf" / "infinity" (case-insensitive), decimals, and simple
/// fractions such as "4/3". Throws std::invalid_argument on anything else.
ExtendedExponent parse_exponent(std::string_view text);

/// Parses a real number with the same decimal/fraction syntax; no range check.
double parse_real(std::string_view text);

/// "inf" for the infinite exponent, shortest round-trip decimal otherwise.
std::string to_string(const ExtendedExponent& e);

}  // namespace polyconst

#endif
