#include "polyconst/optimizer.hpp"

#include <sstream>

namespace polyconst {

void ScanConfig::validate() const {
  if (scan_points < 64) throw std::invalid_argument("scan_points must be >= 64");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("refine_tol must be positive");
  if (refine_iters_max < 1) throw std::invalid_argument("refine_iters_max must be >= 1");
}

namespace {

std::string describe(double where, std::size_t node) {
  std::ostringstream os;
  os.precision(17);
  os << "objective is not finite at t = " << where;
  if (node != NonFiniteObjective::npos) os << " (scan node " << node << ")";
  return os.str();
}

}  // namespace

NonFiniteObjective::NonFiniteObjective(double where, std::size_t node)
    : NumericalFailure(describe(where, node)), where_(where), node_(node) {}

}  // namespace polyconst
