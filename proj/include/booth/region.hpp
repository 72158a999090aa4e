#pragma once

#include <complex>
#include <vector>

#include "booth/errors.hpp"

namespace booth {

using Complex = std::complex<double>;

/// Shape parameter of the oval region: the image of the open unit disc under
/// w = 1 + z / (1 - alpha z^2). alpha = 0 gives the disc |w - 1| < 1; as
/// alpha -> 1 the oval stretches along the real axis.
class RegionParam {
 public:
  explicit RegionParam(double alpha);

  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Signed radial membership verdict about the anchor point w = 1.
/// radial_margin < 0: strictly inside; = 0: on the boundary; > 0: outside.
struct MembershipVerdict {
  bool inside = false;
  double radial_margin = 0.0;

  bool on_boundary(double tol = 1e-12) const {
    return std::abs(radial_margin) <= tol;
  }
};

/// Evaluate the defining map at z, |z| < 1.
Complex eval_map(RegionParam param, Complex z);

/// Boundary point at parameter t (the image of e^{it}):
///   u(t) = 1 + (1-alpha) cos t / (1 + alpha^2 - 2 alpha cos 2t)
///   v(t) =     (1+alpha) sin t / (1 + alpha^2 - 2 alpha cos 2t)
Complex boundary_point(RegionParam param, double t);

/// Radial extent of the region about w = 1 in direction theta:
///   rho(theta)^2 = cos^2(theta)/(1-alpha)^2 + sin^2(theta)/(1+alpha)^2.
double polar_boundary_radius(RegionParam param, double theta);

/// Membership test via the radial margin |w - 1| - rho(arg(w - 1)).
MembershipVerdict contains(RegionParam param, Complex w);

/// n boundary samples at t = 2 pi k / n, k = 0..n-1. Requires n >= 8.
std::vector<Complex> boundary_polyline(RegionParam param, int n);

}  // namespace booth
