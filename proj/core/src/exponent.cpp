#include "polyconst/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace polyconst {

ExtendedExponent::ExtendedExponent(double value) : value_(value), infinite_(false) {
  if (std::isnan(value) || value < 1.0) {
    throw std::invalid_argument("exponent must lie in [1, inf], got " + std::to_string(value));
  }
  if (std::isinf(value)) {
    infinite_ = true;
    value_ = 0.0;
  }
}

ExtendedExponent ExtendedExponent::conjugate() const {
  if (infinite_) return ExtendedExponent(1.0);
  if (value_ == 1.0) return infinity();
  return ExtendedExponent(value_ / (value_ - 1.0));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

double parse_decimal(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  const auto s = trim(text);
  if (iequals(s, "inf") || iequals(s, "infinity") || iequals(s, "+inf")) {
    return std::numeric_limits<double>::infinity();
  }
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double num = parse_decimal(trim(s.substr(0, slash)), text);
    const double den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

ExtendedExponent parse_exponent(std::string_view text) {
  return ExtendedExponent(parse_real(text));
}

std::string to_string(const ExtendedExponent& e) {
  if (e.is_infinite()) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.value());
  return std::string(buf, ptr);
}

}  // namespace polyconst
