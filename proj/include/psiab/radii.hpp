#pragma once

#include <string>

#include "psiab/complexfn.hpp"

namespace psiab {

enum class RadiusBranch { ClosedForm, RootOfEq, WholeDisk };

const char* to_string(RadiusBranch branch);

struct RadiusResult {
  double value = 0.0;
  RadiusBranch branch = RadiusBranch::ClosedForm;
  // Which formula produced `value`: "r(delta)", "r0", "r1", "r2", "r_s".
  std::string formula;
  double equation_residual = 0.0;
  bool sharp = false;
  // Oracle margin just beyond `value`; negative when the property fails there.
  double sharpness_margin = 0.0;
  // Oracle margin just inside `value`.
  double inner_margin = 0.0;
  int iterations = 0;
};

/// g(alpha, gamma) = t2(1): the order of starlikeness on the whole disk in
/// ConjugatePair mode. Requires alpha in (0, 1] and gamma in (0, pi/2].
double g_func(double alpha, double gamma);

/// Root of 2 sin(gamma) = pi - gamma in (1, 1.5), i.e. of g(1, .) = 0.
double gamma0();

/// Root of g(alpha, .) in (gamma0, pi/2) for alpha in (0, 1). Throws
/// InconsistencyError if g does not change sign there.
double gamma_prime(double alpha);

struct GammaThresholds {
  double gamma0 = 0.0;
  double gamma_prime = 0.0;
  double g_star = 0.0;  // g(alpha, pi/2)
};

GammaThresholds gamma_thresholds(double alpha);

/// t2(r) = min over |z| <= r of Re(1 + psi(z)) in ConjugatePair mode; strictly
/// decreasing on (0, 1].
double conjugate_order(const PsiParams& p, double r);

/// Radius of starlikeness of order delta in [0, 1).
RadiusResult starlike_radius(const PsiParams& p, double delta);

/// starlike_radius(p, 0).
RadiusResult univalence_radius(const PsiParams& p);

/// Radius of strong starlikeness of order beta in (0, 1], searched in
/// (0, r0]. The argument bound is not attained by the extremal function, so
/// results are never flagged sharp.
RadiusResult ss_radius(const PsiParams& p, double beta);

/// Radius for the Booth lemniscate class z f'/f - 1 < z/(1 - a z^2).
///
/// The one-argument form couples the class parameter a to p.alpha() and, in
/// Symmetric mode, switches between r0 and r1 at alpha0_bs(). The two-argument
/// form takes a separately and picks r0 whenever the class curve at r0 still
/// fits in psi(D) (checked on the boundary polygon).
RadiusResult bs_radius(const PsiParams& p);
RadiusResult bs_radius(double alpha_class, const PsiParams& p);

/// Radius for the cissoid class z f'/f - 1 < z/((1 - z)(1 + a z)); same
/// conventions as bs_radius.
RadiusResult cs_radius(const PsiParams& p);
RadiusResult cs_radius(double alpha_class, const PsiParams& p);

/// Class curves evaluated at z = r e^{i theta}.
Complex booth_curve(double alpha_class, Complex z);
Complex cissoid_curve(double alpha_class, Complex z);

/// Largest alpha in the coupled Symmetric setting for which the class curve at
/// its r0 radius stays inside the closed-form ellipse.
struct Alpha0Result {
  double value = 1.0;
  bool found = false;
  // Minimum over theta of the ellipse margin at `value`.
  double residual = 0.0;
  int iterations = 0;
};

/// Ellipse margin 1 - (x/h1)^2 - (y/h2)^2 minimised over theta, for the class
/// curve at its r0 radius with class parameter = psi parameter = alpha.
double bs_ellipse_margin(double alpha);
double cs_ellipse_margin(double alpha);

/// Both require Symmetric mode; the parameter value itself is not used.
Alpha0Result alpha0_bs(const PsiParams& p);
Alpha0Result alpha0_cs(const PsiParams& p);

}  // namespace psiab
