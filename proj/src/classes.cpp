#include "booth/classes.hpp"

#include <cmath>
#include <string>

namespace booth {

namespace {

void require_range(bool ok, const char* parameter, const std::string& what) {
  if (!ok) throw domain_error(parameter, what);
}

}  // namespace

FunctionClass FunctionClass::starlike_order(double beta) {
  require_range(beta >= 0.0 && beta < 1.0, "beta",
                "starlike-order requires 0 <= beta < 1 (got " +
                    std::to_string(beta) + ")");
  return {ClassKind::StarlikeOrder, beta, 1.0 - 2.0 * beta, -1.0};
}

FunctionClass FunctionClass::starlike() {
  return {ClassKind::Starlike, 0.0, 1.0, -1.0};
}

FunctionClass FunctionClass::convex() {
  return {ClassKind::Convex, 0.5, 0.0, -1.0};
}

FunctionClass FunctionClass::m_class(double beta) {
  require_range(beta > 1.0 && beta < 4.0 / 3.0, "beta",
                "m-class requires 1 < beta < 4/3 (got " +
                    std::to_string(beta) + ")");
  return {ClassKind::MClass, beta, 1.0 - 2.0 * beta, -1.0};
}

FunctionClass FunctionClass::janowski(double A, double B) {
  require_range(B > -1.0, "B",
                B == -1.0 ? "janowski requires B > -1; for B = -1 use "
                            "starlike-order with beta = (1-A)/2"
                          : "janowski requires -1 < B (got " +
                                std::to_string(B) + ")");
  require_range(B < A, "B", "janowski requires B < A (got B = " +
                                std::to_string(B) + ", A = " +
                                std::to_string(A) + ")");
  require_range(A <= 1.0, "A", "janowski requires A <= 1 (got " +
                                   std::to_string(A) + ")");
  return {ClassKind::Janowski, 0.0, A, B};
}

FunctionClass FunctionClass::parvatham(double beta) {
  require_range(beta > 0.0 && beta <= 1.0, "beta",
                "parvatham requires 0 < beta <= 1 (got " +
                    std::to_string(beta) + ")");
  return {ClassKind::Parvatham, beta, beta, -beta};
}

FunctionClass FunctionClass::fournier(double beta) {
  require_range(beta >= 0.0 && beta < 1.0, "beta",
                "fournier requires 0 <= beta < 1 (got " +
                    std::to_string(beta) + ")");
  return {ClassKind::Fournier, beta, 1.0 - beta, 0.0};
}

std::string_view FunctionClass::name() const noexcept {
  switch (kind_) {
    case ClassKind::StarlikeOrder: return "starlike-order";
    case ClassKind::Starlike: return "starlike";
    case ClassKind::Convex: return "convex";
    case ClassKind::MClass: return "m-class";
    case ClassKind::Janowski: return "janowski";
    case ClassKind::Parvatham: return "parvatham";
    case ClassKind::Fournier: return "fournier";
  }
  return "unknown";
}

std::string_view branch_name(RadiusBranch branch) {
  switch (branch) {
    case RadiusBranch::rho0: return "rho0";
    case RadiusBranch::rho0_tilde: return "rho0_tilde";
    case RadiusBranch::alpha_zero: return "alpha_zero";
    case RadiusBranch::clamped_one: return "clamped_one";
  }
  return "unknown";
}

Disc class_disc(const FunctionClass& cls, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw domain_error("r", "class_disc requires 0 <= r < 1 (got " +
                                std::to_string(r) + ")");
  }
  const double A = cls.coef_a(), B = cls.coef_b();
  const double den = 1.0 - B * B * r * r;
  return {(1.0 - A * B * r * r) / den, std::abs(A - B) * r / den};
}

namespace {

double sqrt_form(double al, double A, double B) {
  // Tangency radius interior to (-1, 1) in x = cos t.
  const double q = 4.0 * al * (A - B) * (A - B) + B * B;
  return 2.0 * std::sqrt(al) / ((1.0 + al) * std::sqrt(q));
}

RadiusResult k_beta_radius(double al, double beta) {
  if (al == 0.0) {
    return {1.0 / (3.0 - 2.0 * beta), RadiusBranch::alpha_zero, false};
  }
  const double beta0 = std::max(0.0, (9.0 * al - 1.0) / (8.0 * al));
  if (beta < beta0) {
    return {sqrt_form(al, 1.0 - 2.0 * beta, -1.0), RadiusBranch::rho0, false};
  }
  return {1.0 / (1.0 + 2.0 * (1.0 - al) * (1.0 - beta)),
          RadiusBranch::rho0_tilde, false};
}

RadiusResult m_class_radius(double al, double beta) {
  if (al == 0.0) {
    return {1.0 / (1.0 + 2.0 * (beta - 1.0)), RadiusBranch::alpha_zero, false};
  }
  if (beta <= 1.0 + (1.0 - al) / (8.0 * al)) {
    return {1.0 / (1.0 + 2.0 * (1.0 - al) * (beta - 1.0)),
            RadiusBranch::rho0_tilde, false};
  }
  return {sqrt_form(al, 1.0 - 2.0 * beta, -1.0), RadiusBranch::rho0, false};
}

RadiusResult janowski_radius(double al, double A, double B) {
  double raw;
  RadiusBranch branch;
  if (al == 0.0) {
    raw = B <= 0.0 ? 1.0 / ((A - B) - B) : 1.0 / ((A - B) + B);
    branch = RadiusBranch::alpha_zero;
  } else if (B <= 0.0) {
    if (4.0 * A * al >= (5.0 * al - 1.0) * B) {
      raw = sqrt_form(al, A, B);
      branch = RadiusBranch::rho0;
    } else {
      raw = 1.0 / ((1.0 - al) * (A - B) - B);
      branch = RadiusBranch::rho0_tilde;
    }
  } else {
    if (4.0 * A * al >= (3.0 * al + 1.0) * B) {
      raw = sqrt_form(al, A, B);
      branch = RadiusBranch::rho0;
    } else {
      raw = 1.0 / ((1.0 - al) * (A - B) + B);
      branch = RadiusBranch::rho0_tilde;
    }
  }
  // min{1, raw} with slack for rounding: parameter sets whose radius is
  // algebraically 1 (the class fills the whole disc) can land a few ulps
  // on either side of it.
  if (raw >= 1.0 - 1e-12) return {1.0, RadiusBranch::clamped_one, true};
  return {raw, branch, false};
}

}  // namespace

RadiusResult bs_radius(const FunctionClass& cls, RegionParam param) {
  const double al = param.alpha();
  switch (cls.kind()) {
    case ClassKind::StarlikeOrder:
    case ClassKind::Starlike:
    case ClassKind::Convex:
      return k_beta_radius(al, cls.beta());
    case ClassKind::MClass:
      return m_class_radius(al, cls.beta());
    case ClassKind::Janowski:
    case ClassKind::Parvatham:
    case ClassKind::Fournier:
      return janowski_radius(al, cls.coef_a(), cls.coef_b());
  }
  throw domain_error("class", "unknown function class");
}

InclusionVerdict inclusion_holds(RegionParam param, double A, double B) {
  require_range(B > -1.0 && B < A && A <= 1.0, B > -1.0 && B < A ? "A" : "B",
                "inclusion test requires -1 < B < A <= 1 (got A = " +
                    std::to_string(A) + ", B = " + std::to_string(B) + ")");
  const double al = param.alpha();
  const double lhs = (1.0 - al) * (1.0 + 6.0 * al + al * al) * std::abs(B) *
                     (A - B);
  const double rhs = 4.0 * al * (1.0 - B * B);
  if (lhs <= rhs &&
      (1.0 + al) * (1.0 + al) *
              (4.0 * al * (A - B) * (A - B) + B * B) <=
          4.0 * al) {
    return {true, InclusionCondition::i};
  }
  if (lhs >= rhs && (1.0 - al) * (A - B) + std::abs(B) <= 1.0) {
    return {true, InclusionCondition::ii};
  }
  return {false, std::nullopt};
}

Complex log_derivative(const FunctionClass& cls, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw domain_error("z", "log_derivative requires |z| < 1");
  }
  const double A = cls.coef_a(), B = cls.coef_b();
  if (B == 0.0) return 1.0 + A * z;
  return (1.0 + A * z) / (1.0 + B * z);
}

}  // namespace booth
