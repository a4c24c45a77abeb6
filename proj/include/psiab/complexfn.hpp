#pragma once

#include <complex>

namespace psiab {

using Complex = std::complex<double>;

enum class Mode { Symmetric, ConjugatePair };

const char* to_string(Mode mode);

/// The parameter pair (A, B) of psi_{A,B}.
///
/// Two admissible configurations exist: Symmetric (A = alpha, B = -alpha) and
/// ConjugatePair (A = alpha e^{i gamma}, B = alpha e^{-i gamma}), with
/// alpha in (0, 1] and gamma in (0, pi/2]. Construction validates ranges and
/// throws PreconditionError otherwise.
class PsiParams {
 public:
  static PsiParams symmetric(double alpha);
  static PsiParams conjugate_pair(double alpha, double gamma);

  Mode mode() const { return mode_; }
  double alpha() const { return alpha_; }
  // Zero in Symmetric mode.
  double gamma() const { return gamma_; }
  Complex A() const { return a_; }
  Complex B() const { return b_; }
  Complex a_minus_b() const { return a_ - b_; }

  bool is_symmetric() const { return mode_ == Mode::Symmetric; }
  // alpha == 1: the image domain degenerates to a strip.
  bool is_unbounded() const { return alpha_ == 1.0; }

 private:
  PsiParams(Mode mode, double alpha, double gamma);

  Mode mode_;
  double alpha_;
  double gamma_;
  Complex a_;
  Complex b_;
};

/// psi_{A,B}(z) = log((1 + Az)/(1 + Bz)) / (A - B), principal branch of the
/// logarithm applied to the single quotient.
///
/// Throws PreconditionError for |z| > 1 and DomainError at the branch points
/// 1 + Az = 0 or 1 + Bz = 0 (only reachable when alpha = 1).
Complex psi_eval(const PsiParams& p, Complex z);

/// Taylor coefficient C_n, where psi(z) = sum_{n>=1} (-1)^{n+1} C_n z^n.
double psi_coeff(const PsiParams& p, int n);

/// Spence's function Li_2(z) on the principal branch (cut along (1, inf)).
Complex dilog(Complex z);

/// The extremal function f_{A,B}(z) = z exp((Li2(-Bz) - Li2(-Az)) / (A - B)).
Complex extremal_eval(const PsiParams& p, Complex z);

/// Re H(z) with H = 1 + z psi''/psi' = -1 + 1/(1 + Az) + 1/(1 + Bz).
double convexity_margin(const PsiParams& p, Complex z);

}  // namespace psiab
