#pragma once

#include <optional>

#include "psiab/complexfn.hpp"

namespace psiab {

/// Auxiliary quantities of the ConjugatePair envelope at radius r.
struct ConjugateTerms {
  double eta = 0.0;
  double tau = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Rectangle enclosing p(D_r) for every p subordinate to psi_{A,B}.
struct BoundEnvelope {
  double r = 0.0;
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;
  std::optional<ConjugateTerms> conjugate;  // ConjugatePair mode only
};

ConjugateTerms conjugate_terms(const PsiParams& p, double r);

/// Closed-form envelope; requires 0 < r <= 1. Unbounded extremes at
/// alpha r = 1 are reported as +-inf.
BoundEnvelope envelope(const PsiParams& p, double r);

/// Growth, distortion and length bounds for f in F[A,B] on |z| = r.
struct GrowthBounds {
  double r = 0.0;
  double lower = 0.0;        // -f_{A,B}(-r)
  double upper = 0.0;        // f_{A,B}(r)
  double ratio_lower = 0.0;  // M(-r)
  double ratio_upper = 0.0;  // M(r)
  double max_modulus = 0.0;  // max_{|z| <= r} |psi(z)|
  double deriv_lower = 0.0;
  double deriv_upper = 0.0;
  double length_lower = 0.0;
  double length_upper = 0.0;
};

/// M(r) = exp(int_0^r psi(t)/t dt), evaluated through the dilogarithm.
/// Accepts -1 <= r <= 1.
double growth_factor(const PsiParams& p, double r);

/// Requires 0 < r < 1.
GrowthBounds growth(const PsiParams& p, double r);

/// -f_{A,B}(-1): radius of the disk covered by every f in F[A,B].
double covering_constant(const PsiParams& p);

/// The bound below is atan(num / den); den = 1 + re_lo(r) vanishes at r0.
struct ArgParts {
  double num = 0.0;
  double den = 0.0;
};

/// Defined for 0 < r <= 1 without a check against r0.
ArgParts arg_parts(const PsiParams& p, double r);

/// Bound on |arg(z f'(z)/f(z))| in |z| < r; requires 0 < r <= r0, where r0 is
/// the radius at which the lower real envelope of 1 + p reaches zero. Returns
/// pi/2 at r = r0.
double arg_bound(const PsiParams& p, double r);

}  // namespace psiab
