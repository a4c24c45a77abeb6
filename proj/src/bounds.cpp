#include "psiab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "psiab/errors.hpp"
#include "psiab/oracle.hpp"

namespace psiab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Tolerance on 1 + re_lo when checking r <= r0 in arg_bound.
constexpr double kArgSlack = 1e-12;

}  // namespace

ConjugateTerms conjugate_terms(const PsiParams& p, double r) {
  const double s = std::sin(p.gamma());
  const double ar = p.alpha() * r;
  const double one_minus = (1.0 - ar) * (1.0 + ar);
  const double two_ars = 2.0 * ar * s;
  const double root = std::hypot(one_minus, two_ars);
  ConjugateTerms t;
  t.eta = std::atan2(two_ars, one_minus);
  t.tau = -std::atan2(ar * ar * std::sin(2.0 * p.gamma()),
                      one_minus + 2.0 * ar * ar * s * s);
  // T1 T2 = 1; the forms below avoid the cancellation in root - 2 a r sin g.
  t.t2 = one_minus / (root + two_ars);
  t.t1 = one_minus > 0.0 ? (root + two_ars) / one_minus : kInf;
  return t;
}

BoundEnvelope envelope(const PsiParams& p, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw PreconditionError("envelope: requires 0 < r <= 1");
  }
  BoundEnvelope env;
  env.r = r;
  const double alpha = p.alpha();
  if (p.is_symmetric()) {
    const double ar = alpha * r;
    env.re_hi = ar < 1.0 ? std::atanh(ar) / alpha : kInf;
    env.re_lo = -env.re_hi;
    env.im_hi = std::atan(ar) / alpha;
    env.im_lo = -env.im_hi;
    return env;
  }
  const ConjugateTerms t = conjugate_terms(p, r);
  const double scale = 2.0 * alpha * std::sin(p.gamma());
  env.re_lo = (t.tau - t.eta) / scale;
  env.re_hi = (t.tau + t.eta) / scale;
  const double log1 = std::log(t.t1);
  const double log2 = std::log(t.t2);
  env.im_lo = std::min(log1, log2) / scale;
  env.im_hi = std::max(log1, log2) / scale;
  env.conjugate = t;
  return env;
}

double growth_factor(const PsiParams& p, double r) {
  if (!(std::abs(r) <= 1.0)) {
    throw PreconditionError("growth_factor: requires |r| <= 1");
  }
  if (r == 0.0) return 1.0;
  const Complex exponent =
      (dilog(-p.B() * r) - dilog(-p.A() * r)) / p.a_minus_b();
  return std::exp(exponent.real());
}

GrowthBounds growth(const PsiParams& p, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw PreconditionError("growth: requires 0 < r < 1");
  }
  GrowthBounds g;
  g.r = r;
  g.upper = extremal_eval(p, r).real();
  g.lower = -extremal_eval(p, -r).real();
  g.ratio_upper = growth_factor(p, r);
  g.ratio_lower = growth_factor(p, -r);
  // psi is analytic on |z| <= r, so its modulus peaks on the circle.
  g.max_modulus = oracle::max_on_circle([&](double t) {
                    return std::abs(psi_eval(p, std::polar(r, t)));
                  }).value;
  const double min_re = 1.0 + envelope(p, r).re_lo;
  g.deriv_upper = (1.0 + g.max_modulus) * g.ratio_upper;
  g.deriv_lower = std::max(0.0, min_re) * g.ratio_lower;
  const double circumference = 2.0 * std::numbers::pi * r;
  g.length_upper = circumference * g.deriv_upper;
  g.length_lower = circumference * g.deriv_lower;
  return g;
}

double covering_constant(const PsiParams& p) {
  return -extremal_eval(p, -1.0).real();
}

ArgParts arg_parts(const PsiParams& p, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw PreconditionError("arg_parts: requires 0 < r <= 1");
  }
  const double alpha = p.alpha();
  if (p.is_symmetric()) {
    const double ar = alpha * r;
    const double num = std::asin(std::min(1.0, 2.0 * ar / (1.0 + ar * ar)));
    // log((1 + ar)/(1 - ar)) = 2 atanh(ar)
    const double den = ar < 1.0 ? 2.0 * alpha - 2.0 * std::atanh(ar) : -kInf;
    return {num / (2.0 * alpha), den / (2.0 * alpha)};
  }
  const ConjugateTerms t = conjugate_terms(p, r);
  const double scale = 2.0 * alpha * std::sin(p.gamma());
  return {std::abs(std::log(t.t2)) / scale, (scale - t.eta + t.tau) / scale};
}

double arg_bound(const PsiParams& p, double r) {
  const ArgParts parts = arg_parts(p, r);
  if (parts.den < -kArgSlack) {
    throw PreconditionError("arg_bound: r exceeds the univalence radius");
  }
  return std::atan2(parts.num, std::max(parts.den, 0.0));
}

}  // namespace psiab
