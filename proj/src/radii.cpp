#include "psiab/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "psiab/bounds.hpp"
#include "psiab/errors.hpp"
#include "psiab/geometry.hpp"
#include "psiab/oracle.hpp"

namespace psiab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kRootTol = 1e-12;
constexpr double kInnerStep = 1e-6;   // relative offset for the inside check
constexpr double kStarOuterStep = 1e-6;
constexpr double kCurveOuterStep = 1e-4;
constexpr double kCurveSlack = 1e-8;
constexpr int kThetaGrid = 2048;
// The class curves touch the ellipse vertex at theta = 0 by construction of
// r0, so the margin search starts just off it.
constexpr double kThetaStart = 1e-3;

double min_real_part(const PsiParams& p, double r) {
  return oracle::min_on_circle([&](double t) {
           return 1.0 + psi_eval(p, std::polar(r, t)).real();
         }).value;
}

double max_abs_arg(const PsiParams& p, double r) {
  return oracle::max_on_circle([&](double t) {
           return std::abs(std::arg(1.0 + psi_eval(p, std::polar(r, t))));
         }).value;
}

void certify_starlike(const PsiParams& p, double delta, RadiusResult& out) {
  const double inner = out.value * (1.0 - kInnerStep);
  const double outer = out.value * (1.0 + kStarOuterStep);
  out.inner_margin = min_real_part(p, inner) - delta;
  if (outer >= 1.0) {
    out.sharp = false;
    out.sharpness_margin = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  out.sharpness_margin = min_real_part(p, outer) - delta;
  out.sharp = out.inner_margin >= -kCurveSlack && out.sharpness_margin < 0.0;
}

// Positive root of a h r^2 + b r - h = 0, written to stay accurate as a -> 0.
double quadratic_radius(double a, double b, double h) {
  return 2.0 * h / (b + std::sqrt(b * b + 4.0 * a * h * h));
}

enum class ClassCurve { Booth, Cissoid };

Complex class_curve(ClassCurve kind, double a, Complex z) {
  return kind == ClassCurve::Booth ? booth_curve(a, z) : cissoid_curve(a, z);
}

// Modulus of the class curve at z = r (its farthest point from 0).
double class_tip(ClassCurve kind, double a, double r) {
  return kind == ClassCurve::Booth ? r / (1.0 - a * r * r)
                                   : r / ((1.0 - r) * (1.0 + a * r));
}

double class_closed_form(ClassCurve kind, double a, double h) {
  if (!std::isfinite(h)) return 1.0;
  const double b = kind == ClassCurve::Booth ? 1.0 : 1.0 + (1.0 - a) * h;
  return quadratic_radius(a, b, h);
}

double ellipse_margin(ClassCurve kind, double alpha) {
  const double h1 = std::atanh(alpha) / alpha;
  const double h2 = std::atan(alpha) / alpha;
  const double r0 = class_closed_form(kind, alpha, h1);
  auto level = [&](double theta) {
    const Complex w = class_curve(kind, alpha, std::polar(r0, theta));
    const double x = w.real() / h1;
    const double y = w.imag() / h2;
    return 1.0 - x * x - y * y;
  };
  const double theta_end = kind == ClassCurve::Booth ? kHalfPi : kPi;
  const double step = (theta_end - kThetaStart) / kThetaGrid;
  double best_theta = kThetaStart;
  double best = level(kThetaStart);
  for (int j = 1; j <= kThetaGrid; ++j) {
    const double t = kThetaStart + step * j;
    const double v = level(t);
    if (v < best) {
      best = v;
      best_theta = t;
    }
  }
  const double lo = std::max(kThetaStart, best_theta - step);
  const double hi = std::min(theta_end, best_theta + step);
  const oracle::CircleExtremum refined =
      oracle::golden_max([&](double t) { return -level(t); }, lo, hi);
  return std::min(best, -refined.value);
}

Alpha0Result find_alpha0(ClassCurve kind) {
  auto margin = [kind](double a) { return ellipse_margin(kind, a); };
  constexpr double lo = 0.01;
  constexpr double hi = 0.99;
  Alpha0Result out;
  if (!(margin(lo) > 0.0 && margin(hi) < 0.0)) {
    out.value = 1.0;
    out.found = false;
    return out;
  }
  const oracle::BracketedRoot root = oracle::find_root(margin, lo, hi, kRootTol);
  out.value = root.root;
  out.found = true;
  out.residual = margin(root.root);
  out.iterations = root.iterations;
  return out;
}

const Alpha0Result& cached_alpha0(ClassCurve kind) {
  static const Alpha0Result booth = find_alpha0(ClassCurve::Booth);
  static const Alpha0Result cissoid = find_alpha0(ClassCurve::Cissoid);
  return kind == ClassCurve::Booth ? booth : cissoid;
}

RadiusResult class_radius(ClassCurve kind, double a, const PsiParams& p,
                          bool coupled) {
  if (!(a > 0.0 && a < 1.0)) {
    throw PreconditionError("class radius: requires class parameter in (0, 1)");
  }
  const ImageDomain d = image_domain(p, 0.0);
  const oracle::RadialCurve curve = [kind, a](double r, double t) {
    return class_curve(kind, a, std::polar(r, t));
  };
  const DomainAxes axes = domain_axes(p);

  RadiusResult out;
  out.branch = RadiusBranch::ClosedForm;
  double target = 0.0;
  if (!p.is_symmetric()) {
    target = axes.k1 + axes.k;
    out.formula = "r2";
  } else {
    const double r0 = class_closed_form(kind, a, axes.h1);
    bool use_r0 = false;
    if (coupled) {
      use_r0 = a <= cached_alpha0(kind).value;
    } else {
      use_r0 = r0 >= 1.0 ||
               oracle::curve_margin(curve, d, r0 * (1.0 - kInnerStep)) >=
                   -kCurveSlack;
    }
    target = use_r0 ? axes.h1 : axes.h2;
    out.formula = use_r0 ? "r0" : "r1";
  }
  out.value = class_closed_form(kind, a, target);
  if (out.value >= 1.0) {
    out.value = 1.0;
    out.branch = RadiusBranch::WholeDisk;
    out.inner_margin = oracle::curve_margin(curve, d, 1.0 - kBoundaryInset);
    return out;
  }
  out.equation_residual = std::abs(class_tip(kind, a, out.value) - target);

  out.inner_margin = oracle::curve_margin(curve, d, out.value * (1.0 - kInnerStep));
  const double outer = out.value * (1.0 + kCurveOuterStep);
  if (outer < 1.0) {
    out.sharpness_margin = oracle::curve_margin(curve, d, outer);
    out.sharp = out.inner_margin >= -kCurveSlack && out.sharpness_margin < 0.0;
  } else {
    out.sharpness_margin = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

void require_symmetric(const PsiParams& p, const char* what) {
  if (!p.is_symmetric()) {
    throw PreconditionError(std::string(what) + ": requires Symmetric mode");
  }
}

}  // namespace

const char* to_string(RadiusBranch branch) {
  switch (branch) {
    case RadiusBranch::ClosedForm:
      return "ClosedForm";
    case RadiusBranch::RootOfEq:
      return "RootOfEq";
    case RadiusBranch::WholeDisk:
      return "WholeDisk";
  }
  return "?";
}

double g_func(double alpha, double gamma) {
  const DomainAxes axes = domain_axes(PsiParams::conjugate_pair(alpha, gamma));
  return 1.0 + axes.k - axes.k1;
}

double gamma0() {
  return oracle::find_root(
             [](double g) { return 2.0 * std::sin(g) - (kPi - g); }, 1.0, 1.5,
             kRootTol)
      .root;
}

double gamma_prime(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw PreconditionError("gamma_prime: requires 0 < alpha < 1");
  }
  const double g0 = gamma0();
  auto g = [alpha](double gamma) { return g_func(alpha, gamma); };
  if (!(g(g0) < 0.0 && g(kHalfPi) > 0.0)) {
    throw InconsistencyError("gamma_prime: g(alpha, .) has no sign change");
  }
  return oracle::find_root(g, g0, kHalfPi, kRootTol).root;
}

GammaThresholds gamma_thresholds(double alpha) {
  return {gamma0(), gamma_prime(alpha), g_func(alpha, kHalfPi)};
}

double conjugate_order(const PsiParams& p, double r) {
  if (r == 0.0) return 1.0;
  return 1.0 + envelope(p, r).re_lo;
}

RadiusResult starlike_radius(const PsiParams& p, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw PreconditionError("starlike_radius: requires 0 <= delta < 1");
  }
  const double alpha = p.alpha();
  RadiusResult out;
  out.formula = "r(delta)";
  if (p.is_symmetric()) {
    // (e^{2x} - 1)/(e^{2x} + 1) = tanh x
    out.value = std::tanh(alpha * (1.0 - delta)) / alpha;
    out.branch = RadiusBranch::ClosedForm;
    out.equation_residual =
        std::abs(1.0 - std::atanh(alpha * out.value) / alpha - delta);
    certify_starlike(p, delta, out);
    return out;
  }
  if (conjugate_order(p, 1.0) >= delta) {
    out.value = 1.0;
    out.branch = RadiusBranch::WholeDisk;
    out.inner_margin = conjugate_order(p, 1.0) - delta;
    return out;
  }
  const oracle::BracketedRoot root = oracle::find_root(
      [&](double r) { return conjugate_order(p, r) - delta; }, 0.0, 1.0,
      kRootTol);
  out.value = root.root;
  out.branch = RadiusBranch::RootOfEq;
  out.iterations = root.iterations;

  // Residual of tan(x) = num/den in the form sin(x) den - cos(x) num.
  const double s = std::sin(p.gamma());
  const double s2 = std::sin(2.0 * p.gamma());
  const double c2 = std::cos(2.0 * p.gamma());
  const double ar = alpha * out.value;
  const double ar2 = ar * ar;
  const double num =
      ar2 * ar2 * s2 + 2.0 * ar2 * ar * s * c2 - ar2 * s2 - 2.0 * ar * s;
  const double den = ar2 * ar2 * c2 - 2.0 * ar2 * ar * s * s2 - ar2 * c2 - ar2 + 1.0;
  const double x = 2.0 * alpha * s * (delta - 1.0);
  out.equation_residual = std::abs(std::sin(x) * den - std::cos(x) * num);
  certify_starlike(p, delta, out);
  return out;
}

RadiusResult univalence_radius(const PsiParams& p) {
  return starlike_radius(p, 0.0);
}

RadiusResult ss_radius(const PsiParams& p, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw PreconditionError("ss_radius: requires 0 < beta <= 1");
  }
  RadiusResult r0 = univalence_radius(p);
  if (beta == 1.0) {
    r0.formula = "r_s";
    return r0;
  }
  const double target = beta * kHalfPi;
  const double sin_t = std::sin(target);
  const double cos_t = std::cos(target);
  // atan(num/den) = target  <=>  num cos(target) - den sin(target) = 0, with
  // den > 0 on (0, r0).
  auto equation = [&](double r) {
    if (r <= 0.0) return -sin_t;
    const ArgParts parts = arg_parts(p, r);
    return parts.num * cos_t - parts.den * sin_t;
  };

  RadiusResult out;
  out.formula = "r_s";
  const double hi = r0.value;
  if (!(equation(hi) > 0.0)) {
    out.value = hi;
    out.branch = RadiusBranch::WholeDisk;
    out.sharp = false;
    out.sharpness_margin =
        target - max_abs_arg(p, std::min(hi, 1.0 - kBoundaryInset));
    return out;
  }
  const oracle::BracketedRoot root = oracle::find_root(equation, 0.0, hi, kRootTol);
  out.value = root.root;
  out.branch = RadiusBranch::RootOfEq;
  out.iterations = root.iterations;
  out.equation_residual = std::abs(equation(root.root));
  out.inner_margin = target - max_abs_arg(p, out.value * (1.0 - kInnerStep));
  out.sharpness_margin = target - max_abs_arg(p, out.value * (1.0 + kStarOuterStep));
  out.sharp = false;
  return out;
}

Complex booth_curve(double alpha_class, Complex z) {
  return z / (1.0 - alpha_class * z * z);
}

Complex cissoid_curve(double alpha_class, Complex z) {
  return z / ((1.0 - z) * (1.0 + alpha_class * z));
}

RadiusResult bs_radius(const PsiParams& p) {
  return class_radius(ClassCurve::Booth, p.alpha(), p, true);
}

RadiusResult bs_radius(double alpha_class, const PsiParams& p) {
  return class_radius(ClassCurve::Booth, alpha_class, p, false);
}

RadiusResult cs_radius(const PsiParams& p) {
  return class_radius(ClassCurve::Cissoid, p.alpha(), p, true);
}

RadiusResult cs_radius(double alpha_class, const PsiParams& p) {
  return class_radius(ClassCurve::Cissoid, alpha_class, p, false);
}

double bs_ellipse_margin(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw PreconditionError("bs_ellipse_margin: requires 0 < alpha < 1");
  }
  return ellipse_margin(ClassCurve::Booth, alpha);
}

double cs_ellipse_margin(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw PreconditionError("cs_ellipse_margin: requires 0 < alpha < 1");
  }
  return ellipse_margin(ClassCurve::Cissoid, alpha);
}

Alpha0Result alpha0_bs(const PsiParams& p) {
  require_symmetric(p, "alpha0_bs");
  return cached_alpha0(ClassCurve::Booth);
}

Alpha0Result alpha0_cs(const PsiParams& p) {
  require_symmetric(p, "alpha0_cs");
  return cached_alpha0(ClassCurve::Cissoid);
}

}  // namespace psiab
