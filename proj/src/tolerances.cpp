#include "attackset/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace attackset {
namespace {

void apply_env(const char* name, double* target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return;
  }
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end != raw && value > 0.0) {
    *target = value;
  }
}

}  // namespace

Tolerances tolerances_from_env(Tolerances base) {
  apply_env("ATTACKSET_EPS_LP", &base.lp);
  apply_env("ATTACKSET_EPS_FEAS", &base.feas);
  apply_env("ATTACKSET_EPS_INCL", &base.incl);
  apply_env("ATTACKSET_EPS_VERT", &base.vert);
  apply_env("ATTACKSET_EPS_EIG", &base.eig);
  apply_env("ATTACKSET_EPS_SUP", &base.sup);
  apply_env("ATTACKSET_EPS_TIE", &base.tie);
  apply_env("ATTACKSET_BISECTION_TOL", &base.bisection);
  return base;
}

const Tolerances& default_tolerances() {
  static const Tolerances defaults = tolerances_from_env();
  return defaults;
}

}  // namespace attackset
