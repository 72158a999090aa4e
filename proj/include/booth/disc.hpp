#pragma once

#include <optional>
#include <utility>

#include "booth/region.hpp"

namespace booth {

/// A closed disc on the real axis, D(center; radius).
struct Disc {
  double center = 1.0;
  double radius = 0.0;
};

/// Real disc center a, validated against the admissible interval
///   (1-2alpha)/(2-2alpha) < a < (3-2alpha)/(2-2alpha),
/// which is exactly where the largest centered disc still covers w = 1.
class CenterParam {
 public:
  CenterParam(RegionParam param, double a);

  double a() const noexcept { return a_; }

 private:
  double a_;
};

/// Case seams for the inscribed-radius dispatch, all functions of alpha:
///   alpha0 = 1 - sqrt(alpha)/(1-alpha^2)   (critical points appear)
///   alpha1 = 1 - 4 alpha / ((1-alpha)(1+6alpha+alpha^2))  (minimum enters [-1,1])
/// and the mirrored values alpha0_tilde, alpha1_tilde on the a > 1 side.
/// For alpha in (0,1): alpha0 <= alpha1 <= 1 <= alpha1_tilde <= alpha0_tilde.
struct CaseThresholds {
  double alpha0 = 1.0;
  double alpha1 = 1.0;
  double alpha0_tilde = 1.0;
  double alpha1_tilde = 1.0;
};

CaseThresholds case_thresholds(RegionParam param);

/// Squared distance from (a, 0) to the boundary point at cos t = x:
///   H(x) = (1-a)^2 + (1 + 2(1-a)(1-alpha)x) / ((1+alpha)^2 - 4 alpha x^2),
/// for x in [-1, 1]. Strictly positive on the admissible interval.
double h_profile(RegionParam param, CenterParam center, double x);

/// Stationary points of H: roots of
///   4 alpha (1-alpha)(1-a) x^2 + 4 alpha x + (1-alpha)(1+alpha)^2 (1-a) = 0.
/// Absent when alpha = 0, a = 1, or the discriminant is negative
/// (alpha < (1-a)^2 (1-alpha^2)^2). x2 = -(alpha - sqrt(D))/(2 alpha (1-a)(1-alpha))
/// is the interior minimum point when the roots are real; the product satisfies
/// x1 * x2 = (1+alpha)^2 / (4 alpha).
std::optional<std::pair<double, double>> critical_points(RegionParam param,
                                                         CenterParam center);

/// Interior minimum value of H for the middle case:
///   s = (sqrt(alpha [alpha - (1-a)^2 (1-alpha^2)^2])
///        + alpha (1 + 2 (1+alpha)^2 (1-a)^2)) / (2 alpha (1+alpha)^2).
/// Requires alpha > 0 and a nonnegative radicand (tiny negative rounding
/// residue above -1e-14 is clamped to zero).
double s_value(RegionParam param, CenterParam center);

/// Radius of the largest disc centered at a contained in the region:
///   a <= alpha1:                  a - 1 + 1/(1-alpha)
///   alpha1 < a < alpha1_tilde:    sqrt(s)
///   a >= alpha1_tilde:            1 - a + 1/(1-alpha)
double inscribed_radius(RegionParam param, CenterParam center);

/// Radius of the smallest disc centered at a containing the region:
///   |a - 1| + 1/(1-alpha).
double circumscribed_radius(RegionParam param, CenterParam center);

}  // namespace booth
