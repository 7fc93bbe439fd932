#ifndef POLYCONST_OPTIMIZER_HPP
#define POLYCONST_OPTIMIZER_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyconst {

struct ScanConfig {
  int scan_points = 4096;
  double refine_tol = 1e-12;
  int refine_iters_max = 200;

  /// Throws std::invalid_argument unless scan_points >= 64, refine_tol > 0 and
  /// refine_iters_max >= 1.
  void validate() const;
};

struct OptResult {
  double argmax = 0.0;
  double value = 0.0;
  double bracket_width = 0.0;
  std::size_t evaluations = 0;
  std::string method;
};

/// A numerical procedure could not complete (non-finite objective values,
/// refinement that failed to converge).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The objective returned NaN or +-inf at a scan node or refinement probe.
class NonFiniteObjective : public NumericalFailure {
 public:
  NonFiniteObjective(double where, std::size_t node);
  double where() const noexcept { return where_; }
  /// Index of the scan node, or npos for a refinement probe.
  std::size_t node() const noexcept { return node_; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  double where_;
  std::size_t node_;
};

namespace detail {

inline constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

template <typename F>
double checked_call(F& f, double t, std::size_t node) {
  const double v = f(t);
  if (!std::isfinite(v)) throw NonFiniteObjective(t, node);
  return v;
}

}  // namespace detail

/// Golden-section maximization of f on [a, b] until the bracket is no wider
/// than cfg.refine_tol. `incumbent` is a known point of [a, b] with value
/// `incumbent_value`; the returned value never drops below it.
template <typename F>
OptResult golden_refine(F&& f, double a, double b, double incumbent, double incumbent_value,
                        const ScanConfig& cfg) {
  OptResult r;
  r.argmax = incumbent;
  r.value = incumbent_value;
  r.method = "golden";

  double c = b - detail::kInvPhi * (b - a);
  double d = a + detail::kInvPhi * (b - a);
  double fc = detail::checked_call(f, c, NonFiniteObjective::npos);
  double fd = detail::checked_call(f, d, NonFiniteObjective::npos);
  r.evaluations += 2;

  auto keep = [&r](double t, double v) {
    if (v > r.value) {
      r.value = v;
      r.argmax = t;
    }
  };
  keep(c, fc);
  keep(d, fd);

  int iters = 0;
  while (b - a > cfg.refine_tol) {
    if (++iters > cfg.refine_iters_max) {
      throw NumericalFailure("golden-section refinement did not converge within " +
                             std::to_string(cfg.refine_iters_max) + " iterations");
    }
    const double width_before = b - a;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - detail::kInvPhi * (b - a);
      fc = detail::checked_call(f, c, NonFiniteObjective::npos);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + detail::kInvPhi * (b - a);
      fd = detail::checked_call(f, d, NonFiniteObjective::npos);
      keep(d, fd);
    }
    ++r.evaluations;
    if (!(b - a < width_before)) {
      throw NumericalFailure("golden-section bracket stopped shrinking at width " +
                             std::to_string(b - a) + " (refine_tol below floating-point resolution?)");
    }
  }
  r.bracket_width = b - a;
  return r;
}

/// Deterministic global maximization of a continuous f on [lo, hi]: evaluate
/// scan_points+1 uniform nodes (both endpoints included), take the best node
/// (ties go to the smaller t), then golden-section refine the bracket formed
/// by its two neighbours.
template <typename F>
OptResult maximize(F&& f, double lo, double hi, const ScanConfig& cfg = {}) {
  cfg.validate();
  if (!(lo < hi)) throw std::invalid_argument("maximize needs lo < hi");

  const int n = cfg.scan_points;
  const double h = (hi - lo) / n;
  auto node = [&](int i) { return i == n ? hi : lo + h * i; };

  int best = 0;
  double best_value = detail::checked_call(f, lo, 0);
  for (int i = 1; i <= n; ++i) {
    const double v = detail::checked_call(f, node(i), static_cast<std::size_t>(i));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }

  const double a = node(best > 0 ? best - 1 : 0);
  const double b = node(best < n ? best + 1 : n);
  OptResult r = golden_refine(f, a, b, node(best), best_value, cfg);
  r.evaluations += static_cast<std::size_t>(n) + 1;
  r.method = "scan+golden";
  return r;
}

}  // namespace polyconst

#endif
