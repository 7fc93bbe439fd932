#ifndef POLYCONST_TEST_SUPPORT_HPP
#define POLYCONST_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "polyconst/polynomial.hpp"

namespace testing_support {

// splitmix64; small and reproducible, independent of <random>.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  polyconst::HomogeneousPoly2 poly(int degree, double scale = 1.0) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = uniform(-scale, scale);
    return polyconst::HomogeneousPoly2(std::move(c));
  }

 private:
  std::uint64_t state_;
};

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testing_support

#endif
