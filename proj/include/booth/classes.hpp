#pragma once

#include <optional>
#include <string_view>

#include "booth/disc.hpp"
#include "booth/region.hpp"

namespace booth {

enum class ClassKind {
  StarlikeOrder,  // Re zf'/f > beta, 0 <= beta < 1
  Starlike,       // beta = 0
  Convex,         // handled through beta = 1/2
  MClass,         // zf'/f in the half-plane-complement disc, 1 < beta < 4/3
  Janowski,       // zf'/f subordinate to (1+Az)/(1+Bz), -1 < B < A <= 1
  Parvatham,      // Janowski with (A, B) = (beta, -beta), 0 < beta <= 1
  Fournier,       // Janowski with (A, B) = (1-beta, 0), 0 <= beta < 1
};

/// An analytic function class, normalized internally to the Moebius data
/// (A, B) of its extremal member zf'/f = (1 + Az)/(1 + Bz). The k-beta
/// families use A = 1 - 2 beta, B = -1.
class FunctionClass {
 public:
  static FunctionClass starlike_order(double beta);
  static FunctionClass starlike();
  static FunctionClass convex();
  static FunctionClass m_class(double beta);
  static FunctionClass janowski(double A, double B);
  static FunctionClass parvatham(double beta);
  static FunctionClass fournier(double beta);

  ClassKind kind() const noexcept { return kind_; }
  double beta() const noexcept { return beta_; }     // meaningful for beta kinds
  double coef_a() const noexcept { return A_; }      // effective A
  double coef_b() const noexcept { return B_; }      // effective B
  std::string_view name() const noexcept;

 private:
  FunctionClass(ClassKind kind, double beta, double A, double B)
      : kind_(kind), beta_(beta), A_(A), B_(B) {}

  ClassKind kind_;
  double beta_;
  double A_;
  double B_;
};

enum class RadiusBranch { rho0, rho0_tilde, alpha_zero, clamped_one };

std::string_view branch_name(RadiusBranch branch);

/// A computed class radius with the formula branch that produced it.
/// value lies in (0, 1]; clamped is true exactly when min{1, .} engaged.
struct RadiusResult {
  double value = 0.0;
  RadiusBranch branch = RadiusBranch::rho0;
  bool clamped = false;
};

enum class InclusionCondition { i, ii };

/// Verdict of the sufficient inclusion test. holds = false means
/// "not established by either condition", not a disproof.
struct InclusionVerdict {
  bool holds = false;
  std::optional<InclusionCondition> via;
};

/// Image of |z| <= r under the extremal zf'/f: the disc with
///   center (1 - A B r^2) / (1 - B^2 r^2), radius |A - B| r / (1 - B^2 r^2).
/// Requires 0 <= r < 1.
Disc class_disc(const FunctionClass& cls, double r);

/// Largest r such that zf'/f maps |z| <= r into the region, for every member
/// of the class. Closed-form branch dispatch:
///   StarlikeOrder(beta), alpha > 0:
///     beta < max{0, (9a-1)/(8a)}:  2 sqrt(a) / ((1+a) sqrt(1 + 16a(1-beta)^2))
///     otherwise:                   1 / (1 + 2(1-a)(1-beta))
///   StarlikeOrder(beta), alpha = 0: 1 / (3 - 2 beta)
///   MClass(beta):
///     beta <= 1 + (1-a)/(8a):      1 / (1 + 2(1-a)(beta-1))
///     otherwise:                   2 sqrt(a) / ((1+a) sqrt(1 + 16a(beta-1)^2))
///   Janowski(A,B), B <= 0:
///     4Aa >= (5a-1)B:  min{1, 2 sqrt(a) / ((1+a) sqrt(4a(A-B)^2 + B^2))}
///     otherwise:       min{1, 1 / ((1-a)(A-B) - B)}
///   Janowski(A,B), B > 0: same with threshold (3a+1)B and rational
///                         form 1 / ((1-a)(A-B) + B)
/// (a = alpha). Parvatham and Fournier reduce to Janowski data.
RadiusResult bs_radius(const FunctionClass& cls, RegionParam param);

/// Sufficient inclusion test for the whole Janowski class:
///   (i)  (1-a)(1+6a+a^2)|B|(A-B) <= 4a(1-B^2)  and
///        (1+a)^2 (4a(A-B)^2 + B^2) <= 4a
///   (ii) (1-a)(1+6a+a^2)|B|(A-B) >= 4a(1-B^2)  and
///        (1-a)(A-B) + |B| <= 1
/// Checked in order; requires -1 < B < A <= 1.
InclusionVerdict inclusion_holds(RegionParam param, double A, double B);

/// Extremal log-derivative value zk'/k at z, |z| < 1:
/// (1 + Az)/(1 + Bz), degenerating to 1 + Az when B = 0.
Complex log_derivative(const FunctionClass& cls, Complex z);

}  // namespace booth
