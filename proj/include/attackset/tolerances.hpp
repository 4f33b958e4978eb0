#ifndef ATTACKSET_TOLERANCES_HPP
#define ATTACKSET_TOLERANCES_HPP

namespace attackset {

/// Absolute numeric tolerances used throughout the library. Every entry can
/// be overridden by an ATTACKSET_* environment variable (see
/// tolerances_from_env) or per call site.
struct Tolerances {
  double lp = 1e-9;         ///< LP reduced-cost / optimality threshold
  double feas = 1e-8;       ///< feasibility slack for halfspace systems
  double incl = 1e-7;       ///< set-inclusion slack on support values
  double vert = 1e-7;       ///< vertex deduplication radius
  double eig = 1e-8;        ///< eigenvalue / eigenvector residual threshold
  double sup = 1e-10;       ///< support values at or below this count as zero
  double tie = 1e-9;        ///< eigenvalue modulus tie tolerance
  double bisection = 1e-3;  ///< default bracket width for the critical-scaling search
};

/// `base` with any ATTACKSET_EPS_{LP,FEAS,INCL,VERT,EIG,SUP,TIE} and
/// ATTACKSET_BISECTION_TOL environment overrides applied.
Tolerances tolerances_from_env(Tolerances base = {});

/// Process-wide defaults; reads the environment once on first use.
const Tolerances& default_tolerances();

}  // namespace attackset

#endif  // ATTACKSET_TOLERANCES_HPP
