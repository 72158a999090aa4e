#include "booth/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "booth/search.hpp"

namespace booth {

namespace {

constexpr int kProfileGrid = 100000;  // intervals; 1e5 + 1 sample points
constexpr int kRadiusScan = 2048;
constexpr double kRadiusEps = 1e-9;

ProfileExtremum profile_extremum(RegionParam param, CenterParam center,
                                 bool minimize) {
  const double sign = minimize ? 1.0 : -1.0;
  auto f = [&](double x) { return sign * h_profile(param, center, x); };

  int best = 0;
  double best_val = f(-1.0);
  for (int i = 1; i <= kProfileGrid; ++i) {
    const double x = -1.0 + 2.0 * i / kProfileGrid;
    const double v = f(x);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double cell = 2.0 / kProfileGrid;
  const double lo = std::max(-1.0, -1.0 + (best - 1) * cell);
  const double hi = std::min(1.0, -1.0 + (best + 1) * cell);
  double x_star = golden_section_min(f, lo, hi);
  // An extremum on the edge of the cell (in particular at x = +-1) beats the
  // interior estimate.
  if (f(lo) < f(x_star)) x_star = lo;
  if (f(hi) < f(x_star)) x_star = hi;
  return {std::sqrt(h_profile(param, center, x_star)), x_star};
}

bool center_admissible(RegionParam param, double a) {
  const double al = param.alpha();
  return a > (1.0 - 2.0 * al) / (2.0 - 2.0 * al) &&
         a < (3.0 - 2.0 * al) / (2.0 - 2.0 * al);
}

// Containment margin of the class disc at |z| <= r: positive while the disc
// fits strictly inside the region.
double containment_margin(const FunctionClass& cls, RegionParam param,
                          double r) {
  const Disc d = class_disc(cls, r);
  return inscribed_radius(param, CenterParam(param, d.center)) - d.radius;
}

}  // namespace

ProfileExtremum oracle_inscribed_point(RegionParam param, CenterParam center) {
  return profile_extremum(param, center, true);
}

ProfileExtremum oracle_circumscribed_point(RegionParam param,
                                           CenterParam center) {
  return profile_extremum(param, center, false);
}

double oracle_inscribed(RegionParam param, CenterParam center) {
  return oracle_inscribed_point(param, center).distance;
}

double oracle_circumscribed(RegionParam param, CenterParam center) {
  return oracle_circumscribed_point(param, center).distance;
}

namespace detail {

std::optional<double> single_crossing_root(
    const std::function<double(double)>& f, double lo, double hi, int n) {
  const double first = f(lo);
  if (first < 0.0) {
    throw std::runtime_error(
        "single_crossing_root: margin already negative at the left endpoint");
  }
  if (first == 0.0) return lo;

  // Accept exactly the sign sequences +...+ [0] -...- ; anything that turns
  // back positive (or touches zero twice) is flagged as inconsistent.
  std::optional<double> exact;
  std::optional<std::pair<double, double>> bracket;
  double prev_x = lo;
  for (int k = 1; k <= n; ++k) {
    const double x = lo + (hi - lo) * k / n;
    const double v = f(x);
    const bool crossed = exact.has_value() || bracket.has_value();
    if (v > 0.0) {
      if (crossed) {
        throw std::runtime_error(
            "single_crossing_root: multiple sign changes in scan");
      }
    } else if (v == 0.0) {
      if (crossed) {
        throw std::runtime_error(
            "single_crossing_root: multiple sign changes in scan");
      }
      exact = x;
    } else if (!crossed) {
      bracket = {prev_x, x};
    }
    prev_x = x;
  }
  if (exact) return exact;
  if (!bracket) return std::nullopt;
  return bisect(f, bracket->first, bracket->second, 1e-10);
}

}  // namespace detail

double oracle_bs_radius(const FunctionClass& cls, RegionParam param) {
  auto admissible = [&](double r) {
    return center_admissible(param, class_disc(cls, r).center);
  };
  auto margin = [&](double r) { return containment_margin(cls, param, r); };

  const double r_lo = kRadiusEps;
  double r_hi = 1.0 - kRadiusEps;
  bool truncated = false;
  if (!admissible(r_hi)) {
    // The induced center leaves the admissible interval before r -> 1; this
    // can only happen past the containment root. Scan up to just inside the
    // exit point.
    truncated = true;
    double inside = r_lo, outside = r_hi;
    if (!admissible(inside)) {
      throw std::runtime_error(
          "oracle_bs_radius: class disc center inadmissible at r = 1e-9");
    }
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (inside + outside);
      (admissible(mid) ? inside : outside) = mid;
    }
    r_hi = inside;
  }

  const auto root = detail::single_crossing_root(margin, r_lo, r_hi,
                                                 kRadiusScan);
  if (root) return *root;
  if (truncated) {
    throw std::runtime_error(
        "oracle_bs_radius: containment margin stayed positive up to the "
        "admissibility exit");
  }
  return 1.0;  // the margin is positive on all of (0, 1)
}

SharpnessWitness sharpness_witness(const FunctionClass& cls, RegionParam param,
                                   double r, int sweep_n, double margin_tol) {
  if (!(r > 0.0 && r < 1.0)) {
    throw domain_error("r",
                       "sharpness_witness requires 0 < r < 1 (got " +
                           std::to_string(r) +
                           "); clamped radii have no tangency to exhibit");
  }
  if (sweep_n < 2) {
    throw domain_error("n", "sharpness_witness sweep needs at least 2 points");
  }

  const double al = param.alpha();
  const double A = cls.coef_a(), B = cls.coef_b();
  const RadiusResult rr = bs_radius(cls, param);

  double x0;
  if (rr.branch == RadiusBranch::rho0) {
    const double q = 4.0 * al * (A - B) * (A - B) + B * B;
    x0 = -B * (1.0 + al) / (2.0 * std::sqrt(al * q));
  } else {
    // Vertex tangency: the touch happens at real z, on the side determined
    // by which way the extremal pushes the disc.
    x0 = B > 0.0 ? -1.0 : 1.0;
  }

  auto margin_at = [&](double t) {
    const Complex z = r * Complex(std::cos(t), std::sin(t));
    return contains(param, log_derivative(cls, z)).radial_margin;
  };

  const double t_star = std::acos(std::clamp(x0, -1.0, 1.0));
  const double touch_margin = margin_at(t_star);

  auto abs_margin = [&](double t) { return std::abs(margin_at(t)); };
  int best = 0;
  double best_val = abs_margin(0.0);
  const double pi = std::numbers::pi;
  for (int j = 1; j < sweep_n; ++j) {
    const double v = abs_margin(pi * j / (sweep_n - 1));
    if (v < best_val) {
      best_val = v;
      best = j;
    }
  }
  const double cell = pi / (sweep_n - 1);
  const double lo = std::max(0.0, (best - 1) * cell);
  const double hi = std::min(pi, (best + 1) * cell);
  const double t_min = golden_section_min(abs_margin, lo, hi);

  SharpnessWitness w;
  w.x0 = x0;
  w.t_star = t_star;
  w.margin = touch_margin;
  w.sweep_x = std::cos(t_min);
  w.sweep_abs_margin = abs_margin(t_min);
  w.witnessed = std::abs(touch_margin) <= margin_tol &&
                w.sweep_abs_margin <= margin_tol &&
                std::abs(w.sweep_x - x0) <= 1e-4;
  return w;
}

SubordinationResult subordination_check(const FunctionClass& cls,
                                        RegionParam param, double r, int n) {
  if (!(r > 0.0 && r < 1.0)) {
    throw domain_error("r", "subordination_check requires 0 < r < 1 (got " +
                                std::to_string(r) + ")");
  }
  if (n < 64) {
    throw domain_error("n", "subordination_check requires n >= 64 samples "
                            "(got " + std::to_string(n) + ")");
  }
  SubordinationResult res{true, -std::numeric_limits<double>::infinity(), 0.0};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    const double t = two_pi * k / n;
    const Complex z = r * Complex(std::cos(t), std::sin(t));
    const double m = contains(param, log_derivative(cls, z)).radial_margin;
    if (m > res.worst_margin) {
      res.worst_margin = m;
      res.worst_angle = t;
    }
    if (!(m < 0.0)) res.inside = false;
  }
  return res;
}

namespace {

ContainmentReport make_report(double closed_form, double oracle,
                              std::optional<double> touch, double tolerance) {
  ContainmentReport rep;
  rep.closed_form = closed_form;
  rep.oracle = oracle;
  rep.abs_gap = std::abs(closed_form - oracle);
  rep.touch_parameter = touch;
  rep.tolerance = tolerance;
  rep.verdict = rep.abs_gap <= tolerance ? Verdict::pass : Verdict::fail;
  return rep;
}

}  // namespace

ContainmentReport verify_inscribed(RegionParam param, CenterParam center,
                                   double tolerance) {
  const ProfileExtremum ext = oracle_inscribed_point(param, center);
  return make_report(inscribed_radius(param, center), ext.distance, ext.x,
                     tolerance);
}

ContainmentReport verify_circumscribed(RegionParam param, CenterParam center,
                                       double tolerance) {
  const ProfileExtremum ext = oracle_circumscribed_point(param, center);
  return make_report(circumscribed_radius(param, center), ext.distance, ext.x,
                     tolerance);
}

ContainmentReport verify_bs_radius(const FunctionClass& cls, RegionParam param,
                                   double tolerance) {
  return make_report(bs_radius(cls, param).value, oracle_bs_radius(cls, param),
                     std::nullopt, tolerance);
}

}  // namespace booth
