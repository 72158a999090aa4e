#include "booth/disc.hpp"

#include <cmath>
#include <string>

namespace booth {

CenterParam::CenterParam(RegionParam param, double a) : a_(a) {
  const double al = param.alpha();
  const double lo = (1.0 - 2.0 * al) / (2.0 - 2.0 * al);
  const double hi = (3.0 - 2.0 * al) / (2.0 - 2.0 * al);
  if (!(a > lo && a < hi)) {
    throw domain_error("a", "center a must lie in (" + std::to_string(lo) +
                                ", " + std::to_string(hi) +
                                ") for alpha = " + std::to_string(al) +
                                " (got " + std::to_string(a) + ")");
  }
}

CaseThresholds case_thresholds(RegionParam param) {
  const double al = param.alpha();
  const double root_gap = std::sqrt(al) / (1.0 - al * al);
  const double seam_gap =
      4.0 * al / ((1.0 - al) * (1.0 + 6.0 * al + al * al));
  return {1.0 - root_gap, 1.0 - seam_gap, 1.0 + root_gap, 1.0 + seam_gap};
}

double h_profile(RegionParam param, CenterParam center, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw domain_error("x", "h_profile requires x in [-1, 1]");
  }
  const double al = param.alpha();
  const double a = center.a();
  const double u = 1.0 - a;
  return u * u + (1.0 + 2.0 * u * (1.0 - al) * x) /
                     ((1.0 + al) * (1.0 + al) - 4.0 * al * x * x);
}

std::optional<std::pair<double, double>> critical_points(RegionParam param,
                                                         CenterParam center) {
  const double al = param.alpha();
  const double a = center.a();
  if (al == 0.0 || a == 1.0) return std::nullopt;  // quadratic degenerates
  const double u = 1.0 - a;
  const double omal2 = 1.0 - al * al;
  const double disc = al * (al - u * u * omal2 * omal2);
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  const double den = 2.0 * al * u * (1.0 - al);
  // x2 = -(al - s)/den cancels badly for a near 1; recover it from the
  // stable root through the product identity instead.
  const double x1 = -(al + s) / den;
  const double x2 = (1.0 + al) * (1.0 + al) / (4.0 * al) / x1;
  return std::make_pair(x1, x2);
}

double s_value(RegionParam param, CenterParam center) {
  const double al = param.alpha();
  if (al == 0.0) {
    throw domain_error("alpha", "s_value is undefined at alpha = 0");
  }
  const double u = 1.0 - center.a();
  const double omal2 = 1.0 - al * al;
  double rad = al - u * u * omal2 * omal2;
  if (rad < 0.0) {
    if (rad <= -1e-14) {
      throw domain_error(
          "a", "s_value radicand is negative: alpha < (1-a)^2 (1-alpha^2)^2");
    }
    rad = 0.0;  // rounding residue at the case seam
  }
  const double opal2 = (1.0 + al) * (1.0 + al);
  return (std::sqrt(al * rad) + al * (1.0 + 2.0 * opal2 * u * u)) /
         (2.0 * al * opal2);
}

double inscribed_radius(RegionParam param, CenterParam center) {
  const double al = param.alpha();
  const double a = center.a();
  const CaseThresholds th = case_thresholds(param);
  if (a <= th.alpha1) return a - 1.0 + 1.0 / (1.0 - al);
  if (a >= th.alpha1_tilde) return 1.0 - a + 1.0 / (1.0 - al);
  return std::sqrt(s_value(param, center));
}

double circumscribed_radius(RegionParam param, CenterParam center) {
  return std::abs(center.a() - 1.0) + 1.0 / (1.0 - param.alpha());
}

}  // namespace booth
