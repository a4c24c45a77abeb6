#include "psiab/complexfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "psiab/errors.hpp"

namespace psiab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;
// Slack on |z| <= 1 so that points produced as r e^{i theta} with r = 1 pass.
constexpr double kUnitSlack = 1e-14;

// B_{2k} / (2k+1)!, k = 1, 2, ...
constexpr std::array<double, 22> kBernoulliCoeffs = {
    2.7777777777777777778e-2,  -2.7777777777777777778e-4,
    4.7241118669690098262e-6,  -9.1857730746619635508e-8,
    1.8978869988970999072e-9,  -4.0647616451442255268e-11,
    8.9216910204564525552e-13, -1.9939295860721075687e-14,
    4.5189800296199181917e-16, -1.0356517612181247014e-17,
    2.3952186210261867457e-19, -5.5817858743250093363e-21,
    1.3091507554183212858e-22, -3.0874198024267402932e-24,
    7.3159756527022034204e-26, -1.7408456572340007410e-27,
    4.1576356446138997196e-29, -9.9621484882846221032e-31,
    2.3940344248961653005e-32, -5.7683473553673900843e-34,
    1.3931794796470079778e-35, -3.3721219654850894705e-37,
};

// log(1 + w) without losing digits when |w| is small.
Complex log1p_complex(Complex w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

// Defining series sum z^k / k^2; used for |z| <= 0.5.
Complex dilog_series(Complex z) {
  Complex sum = 0.0;
  Complex power = z;
  for (int k = 1; k < 400; ++k) {
    const Complex term = power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= z;
  }
  return sum;
}

// Series in u = -log(1 - z) with Bernoulli coefficients. Converges for
// |u| < 2 pi; used for |z| <= 1, Re z <= 1/2 where |u| < 1.8.
Complex dilog_bernoulli(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex sum = u - 0.25 * u2;
  Complex power = u * u2;
  for (double c : kBernoulliCoeffs) {
    const Complex term = c * power;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= u2;
  }
  return sum;
}

// |z| <= 1 and Re z <= 1/2.
Complex dilog_left(Complex z) {
  return std::abs(z) <= 0.5 ? dilog_series(z) : dilog_bernoulli(z);
}

// |z| <= 1.
Complex dilog_unit(Complex z) {
  if (z == Complex(1.0, 0.0)) return kPi2Over6;
  if (std::abs(z) <= 0.5) return dilog_series(z);
  if (z.real() <= 0.5) return dilog_bernoulli(z);
  // Reflection; 1 - z then has modulus < 1 and real part < 1/2.
  return kPi2Over6 - std::log(z) * std::log(1.0 - z) - dilog_left(1.0 - z);
}

void require_unit_disk(Complex z, const char* op) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PreconditionError(std::string(op) + ": non-finite argument");
  }
  if (std::abs(z) > 1.0 + kUnitSlack) {
    throw PreconditionError(std::string(op) + ": |z| > 1");
  }
}

}  // namespace

const char* to_string(Mode mode) {
  return mode == Mode::Symmetric ? "symmetric" : "conjugate";
}

PsiParams::PsiParams(Mode mode, double alpha, double gamma)
    : mode_(mode), alpha_(alpha), gamma_(gamma) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw PreconditionError("alpha must lie in (0, 1]");
  }
  if (mode == Mode::Symmetric) {
    a_ = alpha;
    b_ = -alpha;
  } else {
    if (!(gamma > 0.0 && gamma <= kPi / 2.0)) {
      throw PreconditionError("gamma must lie in (0, pi/2]");
    }
    a_ = std::polar(alpha, gamma);
    b_ = std::conj(a_);
  }
}

PsiParams PsiParams::symmetric(double alpha) {
  return PsiParams(Mode::Symmetric, alpha, 0.0);
}

PsiParams PsiParams::conjugate_pair(double alpha, double gamma) {
  return PsiParams(Mode::ConjugatePair, alpha, gamma);
}

Complex psi_eval(const PsiParams& p, Complex z) {
  require_unit_disk(z, "psi_eval");
  const Complex num = 1.0 + p.A() * z;
  const Complex den = 1.0 + p.B() * z;
  constexpr double kBranchEps = 4.0 * std::numeric_limits<double>::epsilon();
  if (std::abs(num) <= kBranchEps || std::abs(den) <= kBranchEps) {
    throw DomainError("psi_eval: z is a branch point of psi");
  }
  if (std::abs(num) < 0.5 * std::abs(den)) {
    // Near -1/A take the log of the quotient directly.
    Complex value = std::log(num / den) / p.a_minus_b();
    if (z.imag() == 0.0) value.imag(0.0);
    return value;
  }
  // (1 + Az)/(1 + Bz) = 1 + (A - B) z / (1 + Bz)
  const Complex w = p.a_minus_b() * z / den;
  Complex value = log1p_complex(w) / p.a_minus_b();
  if (z.imag() == 0.0) value.imag(0.0);  // real coefficients
  return value;
}

double psi_coeff(const PsiParams& p, int n) {
  if (n < 1) throw PreconditionError("psi_coeff: n must be >= 1");
  const double scale = std::pow(p.alpha(), n - 1) / n;
  if (p.is_symmetric()) return n % 2 == 1 ? scale : 0.0;
  // (A^n - B^n) / (A - B) = alpha^{n-1} sin(n gamma) / sin(gamma)
  return scale * std::sin(n * p.gamma()) / std::sin(p.gamma());
}

Complex dilog(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PreconditionError("dilog: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() > 1.0) {
    throw DomainError("dilog: argument on the branch cut (1, inf)");
  }
  if (std::abs(z) <= 1.0) return dilog_unit(z);
  // Inversion.
  const Complex l = std::log(-z);
  return -kPi2Over6 - 0.5 * l * l - dilog_unit(1.0 / z);
}

Complex extremal_eval(const PsiParams& p, Complex z) {
  require_unit_disk(z, "extremal_eval");
  if (z == 0.0) return 0.0;
  const Complex exponent =
      (dilog(-p.B() * z) - dilog(-p.A() * z)) / p.a_minus_b();
  Complex value = z * std::exp(exponent);
  if (z.imag() == 0.0) value.imag(0.0);
  return value;
}

double convexity_margin(const PsiParams& p, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw PreconditionError("convexity_margin: requires |z| < 1");
  }
  const Complex h = -1.0 + 1.0 / (1.0 + p.A() * z) + 1.0 / (1.0 + p.B() * z);
  return h.real();
}

}  // namespace psiab
