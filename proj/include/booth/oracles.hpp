#pragma once

#include <functional>
#include <optional>

#include "booth/classes.hpp"
#include "booth/disc.hpp"
#include "booth/region.hpp"

namespace booth {

// Brute-force geometric checks, kept deliberately independent of the closed
// forms they certify: everything here is built from the H profile, the
// membership test, the class disc, and the extremal log-derivative.

/// min over x in [-1,1] of sqrt(H(x)): dense grid scan (1e5+1 points)
/// followed by golden-section refinement of the winning cell.
double oracle_inscribed(RegionParam param, CenterParam center);

/// max over x in [-1,1] of sqrt(H(x)), same scheme.
double oracle_circumscribed(RegionParam param, CenterParam center);

/// As above but also reporting the extremal abscissa x.
struct ProfileExtremum {
  double distance = 0.0;
  double x = 0.0;
};
ProfileExtremum oracle_inscribed_point(RegionParam param, CenterParam center);
ProfileExtremum oracle_circumscribed_point(RegionParam param,
                                           CenterParam center);

/// Containment bisection for the class radius: the margin
///   m(r) = inscribed_radius(alpha, center of class_disc(cls, r))
///          - radius of class_disc(cls, r)
/// is scanned on a 2048-point grid over (0, 1) (endpoints 1e-9 and 1-1e-9),
/// which must show exactly one sign change; the bracket is then bisected.
/// Returns 1 when the margin stays positive across the whole scan.
/// Throws std::runtime_error when the scan is inconsistent (multiple sign
/// changes, or the induced center leaves the admissible interval before any
/// crossing is found).
double oracle_bs_radius(const FunctionClass& cls, RegionParam param);

/// Boundary-tangency evidence at a claimed radius r < 1. The analytic touch
/// abscissa x0 = cos t* of the extremal image point on the region boundary:
///   sqrt branch:      x0 = -B (1+alpha) / (2 sqrt(alpha (4alpha(A-B)^2 + B^2)))
///   rational branch:  x0 = +1 (vertex touch via z = +r), or -1 for
///                     Janowski B > 0 (z = -r)
/// margin is the radial membership margin of log_derivative(cls, r e^{i t*}).
/// The 8192-point sweep over t in [0, pi] (refined by golden section) locates
/// the abscissa of smallest |margin|; witnessed requires the touch margin and
/// sweep margin within margin_tol and |sweep_x - x0| <= 1e-4.
struct SharpnessWitness {
  double x0 = 1.0;
  double t_star = 0.0;
  double margin = 0.0;
  double sweep_x = 1.0;
  double sweep_abs_margin = 0.0;
  bool witnessed = false;
};

SharpnessWitness sharpness_witness(const FunctionClass& cls, RegionParam param,
                                   double r, int sweep_n = 8192,
                                   double margin_tol = 1e-7);

/// Sample n points of the extremal image on |z| = r and test membership.
struct SubordinationResult {
  bool inside = false;
  double worst_margin = 0.0;
  double worst_angle = 0.0;
};

SubordinationResult subordination_check(const FunctionClass& cls,
                                        RegionParam param, double r, int n);

/// Closed-form vs oracle comparison record.
enum class Verdict { pass, fail };

struct ContainmentReport {
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_gap = 0.0;
  std::optional<double> touch_parameter;
  double tolerance = 0.0;
  Verdict verdict = Verdict::fail;
};

ContainmentReport verify_inscribed(RegionParam param, CenterParam center,
                                   double tolerance = 1e-8);
ContainmentReport verify_circumscribed(RegionParam param, CenterParam center,
                                       double tolerance = 1e-8);
ContainmentReport verify_bs_radius(const FunctionClass& cls, RegionParam param,
                                   double tolerance = 1e-6);

namespace detail {

/// Scan [lo, hi] on n+1 evenly spaced points for sign changes of f, then
/// bisect the unique bracket. Returns nullopt when f > 0 on every point;
/// throws std::runtime_error on zero-or-multiple-crossing inconsistencies
/// (f < 0 at the left end, or more than one sign change).
std::optional<double> single_crossing_root(const std::function<double(double)>& f,
                                           double lo, double hi, int n);

}  // namespace detail

}  // namespace booth
