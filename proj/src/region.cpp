#include "booth/region.hpp"

#include <cmath>
#include <numbers>

namespace booth {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RegionParam::RegionParam(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw domain_error("alpha", "alpha must satisfy 0 <= alpha < 1 (got " +
                                    std::to_string(alpha) + ")");
  }
}

Complex eval_map(RegionParam param, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw domain_error("z", "eval_map requires |z| < 1");
  }
  return 1.0 + z / (1.0 - param.alpha() * z * z);
}

Complex boundary_point(RegionParam param, double t) {
  if (!std::isfinite(t)) {
    throw domain_error("t", "boundary parameter t must be finite");
  }
  const double a = param.alpha();
  const double tr = std::remainder(t, kTwoPi);
  const double den = 1.0 + a * a - 2.0 * a * std::cos(2.0 * tr);
  return {1.0 + (1.0 - a) * std::cos(tr) / den,
          (1.0 + a) * std::sin(tr) / den};
}

double polar_boundary_radius(RegionParam param, double theta) {
  const double a = param.alpha();
  const double th = std::remainder(theta, kTwoPi);
  const double c = std::cos(th), s = std::sin(th);
  return std::sqrt(c * c / ((1.0 - a) * (1.0 - a)) +
                   s * s / ((1.0 + a) * (1.0 + a)));
}

MembershipVerdict contains(RegionParam param, Complex w) {
  if (w == Complex(1.0, 0.0)) {
    // The anchor itself: depth equals the shortest radial extent.
    return {true, -1.0 / (1.0 + param.alpha())};
  }
  const Complex d = w - 1.0;
  const double margin = std::abs(d) - polar_boundary_radius(param, std::arg(d));
  return {margin < 0.0, margin};
}

std::vector<Complex> boundary_polyline(RegionParam param, int n) {
  if (n < 8) {
    throw domain_error("n", "boundary_polyline requires n >= 8 samples (got " +
                                std::to_string(n) + ")");
  }
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    pts.push_back(boundary_point(param, kTwoPi * k / n));
  }
  return pts;
}

}  // namespace booth
