#include <doctest.h>

#include <cmath>
#include <random>

#include "psiab/complexfn.hpp"
#include "psiab/errors.hpp"
#include "support.hpp"

using namespace psiab;
using testsupport::kPi;

TEST_CASE("psi vanishes at the origin") {
  for (const PsiParams& p : testsupport::sample_params()) {
    CHECK(std::abs(psi_eval(p, 0.0)) == 0.0);
  }
  CHECK(std::abs(psi_eval(PsiParams::symmetric(1.0), 0.0)) == 0.0);
}

TEST_CASE("symmetric psi at z = 1 is the maximum real part on the circle") {
  const PsiParams p = PsiParams::symmetric(0.5);
  const Complex v = psi_eval(p, 1.0);
  CHECK(v.real() == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
  const double sampled = testsupport::grid_max(
      [&](double t) { return psi_eval(p, std::polar(1.0, t)).real(); });
  CHECK(std::abs(sampled - v.real()) <= 1e-12);
}

TEST_CASE("conjugate psi at i is imaginary with the largest imaginary part") {
  const PsiParams p = PsiParams::conjugate_pair(0.5, kPi / 2.0);
  const Complex v = psi_eval(p, Complex(0.0, 1.0));
  CHECK(std::abs(v.real()) <= 1e-15);
  CHECK(v.imag() == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  const double sampled = testsupport::grid_max(
      [&](double t) { return psi_eval(p, std::polar(1.0, t)).imag(); });
  CHECK(std::abs(sampled - v.imag()) <= 1e-12);
}

TEST_CASE("psi rejects points outside the closed disk and branch points") {
  CHECK_THROWS_AS(psi_eval(PsiParams::symmetric(0.5), Complex(1.1, 0.0)),
                  PreconditionError);
  CHECK_THROWS_AS(psi_eval(PsiParams::symmetric(1.0), Complex(-1.0, 0.0)),
                  DomainError);
  CHECK_THROWS_AS(psi_eval(PsiParams::symmetric(1.0), Complex(1.0, 0.0)),
                  DomainError);
  const PsiParams c = PsiParams::conjugate_pair(1.0, kPi / 3.0);
  CHECK_THROWS_AS(psi_eval(c, -1.0 / c.A()), DomainError);
  // Large but finite next to a branch point.
  CHECK(std::isfinite(psi_eval(PsiParams::symmetric(1.0), Complex(-1.0 + 1e-12, 0.0)).real()));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PsiParams::symmetric(0.0), PreconditionError);
  CHECK_THROWS_AS(PsiParams::symmetric(1.5), PreconditionError);
  CHECK_THROWS_AS(PsiParams::conjugate_pair(0.5, 0.0), PreconditionError);
  CHECK_THROWS_AS(PsiParams::conjugate_pair(0.5, 2.0), PreconditionError);
  const PsiParams c = PsiParams::conjugate_pair(0.7, 1.0);
  CHECK(std::abs(c.A()) == doctest::Approx(0.7));
  CHECK(c.B() == std::conj(c.A()));
  CHECK(c.A().imag() > 0.0);
  const PsiParams s = PsiParams::symmetric(0.7);
  CHECK(std::abs(s.A() + s.B()) == 0.0);
}

TEST_CASE("coefficients: first, second and Cauchy-integral values") {
  for (const PsiParams& p : testsupport::sample_params()) {
    CHECK(psi_coeff(p, 1) == 1.0);
    if (p.is_symmetric()) CHECK(psi_coeff(p, 2) == 0.0);
  }
  const PsiParams p = PsiParams::conjugate_pair(0.5, kPi / 3.0);
  CHECK(psi_coeff(p, 2) == doctest::Approx(0.25).epsilon(1e-14));
  for (int n = 1; n <= 12; ++n) {
    CHECK(std::abs(psi_coeff(p, n) - testsupport::cauchy_coefficient(p, n, 0.5)) <=
          1e-12);
  }
  CHECK_THROWS_AS(psi_coeff(p, 0), PreconditionError);
}

TEST_CASE("coefficients are real and bounded by alpha^(n-1)") {
  for (const PsiParams& p : testsupport::sample_params()) {
    Complex an = 1.0;
    Complex bn = 1.0;
    for (int n = 1; n <= 100; ++n) {
      an *= p.A();
      bn *= p.B();
      const Complex direct = (an - bn) / (static_cast<double>(n) * p.a_minus_b());
      CHECK(std::abs(direct.imag()) < 1e-14);
      CHECK(std::abs(psi_coeff(p, n) - direct.real()) <= 1e-14);
      CHECK(std::abs(psi_coeff(p, n)) <= std::pow(p.alpha(), n - 1) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("Taylor series matches direct evaluation for |z| <= 0.9") {
  std::vector<PsiParams> sets = testsupport::sample_params();
  sets.push_back(PsiParams::symmetric(1.0));
  sets.push_back(PsiParams::conjugate_pair(1.0, 1.0));
  for (const PsiParams& p : sets) {
    // The truncation bound 2 a^N 0.9^(N+1)/(1 - 0.9 a) needs more terms at a = 1.
    const int terms = p.alpha() < 1.0 ? 200 : 400;
    std::vector<double> c(terms + 1);
    for (int n = 1; n <= terms; ++n) c[n] = psi_coeff(p, n);
    for (int i = 1; i <= 9; ++i) {
      for (int j = 0; j < 32; ++j) {
        const Complex z = std::polar(0.1 * i, testsupport::theta_at(j, 32));
        Complex s = 0.0;
        for (int n = terms; n >= 1; --n) s = (s + (n % 2 == 1 ? c[n] : -c[n])) * z;
        CHECK(std::abs(s - psi_eval(p, z)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("psi commutes with conjugation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const PsiParams& p : testsupport::sample_params()) {
    for (int k = 0; k < 1000; ++k) {
      const Complex z = std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
      CHECK(std::abs(psi_eval(p, std::conj(z)) - std::conj(psi_eval(p, z))) <= 1e-14);
    }
  }
}

TEST_CASE("dilogarithm special values") {
  CHECK(std::abs(dilog(0.0)) == 0.0);
  const double minus_one = testsupport::alternating_dilog_minus_one();
  CHECK(minus_one == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(std::abs(dilog(-1.0).real() - minus_one) <= 1e-12);
  const double half = testsupport::dilog_partial_sum(0.5, 60).real();
  CHECK(std::abs(dilog(0.5).real() - half) <= 1e-14);
  CHECK(dilog(0.5).real() ==
        doctest::Approx(kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0))
            .epsilon(1e-14));
  CHECK(dilog(1.0).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
}

TEST_CASE("dilogarithm agrees with the defining series inside the disk") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const Complex z = std::polar(0.9 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const Complex ref = testsupport::dilog_partial_sum(z, 400);
    CHECK(std::abs(dilog(z) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("dilogarithm duplication identity") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = std::polar(0.99 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const Complex lhs = dilog(z) + dilog(-z);
    CHECK(std::abs(lhs - 0.5 * dilog(z * z)) <= 1e-12);
  }
}

TEST_CASE("dilogarithm derivative outside the unit disk") {
  // d/dz Li2(z) = -log(1 - z)/z, checked by central differences.
  const double h = 1e-5;
  for (Complex z : {Complex(-3.0, 0.5), Complex(0.3, 2.0), Complex(2.0, -1.5),
                    Complex(-1.2, -0.1), Complex(1.5, 0.4)}) {
    const Complex fd = (dilog(z + h) - dilog(z - h)) / (2.0 * h);
    CHECK(std::abs(fd + std::log(1.0 - z) / z) <= 1e-8);
  }
}

TEST_CASE("dilogarithm rejects the branch cut") {
  CHECK_THROWS_AS(dilog(2.0), DomainError);
  CHECK_NOTHROW(dilog(Complex(2.0, 1e-9)));
}

TEST_CASE("extremal function normalisation") {
  for (const PsiParams& p : testsupport::sample_params()) {
    CHECK(std::abs(extremal_eval(p, 0.0)) == 0.0);
    const double h = 1e-6;
    const Complex slope = (extremal_eval(p, h) - extremal_eval(p, -h)) / (2.0 * h);
    CHECK(std::abs(slope - 1.0) <= 1e-8);
  }
}

TEST_CASE("extremal function at -1 for alpha = 1") {
  const PsiParams p = PsiParams::symmetric(1.0);
  const Complex v = extremal_eval(p, -1.0);
  CHECK(v.imag() == 0.0);
  // psi(t)/t = atanh(t)/t: substitute t = -(1 - s^4) to tame the log
  // singularity at t = -1 before integrating.
  const double integral = testsupport::simpson(
      [&](double s) {
        const double s2 = s * s;
        if (s2 * s2 < 1e-15) return 0.0;
        const double t = -(1.0 - s2 * s2);
        return testsupport::psi_over_t(p, t) * 4.0 * s2 * s;
      },
      0.0, 1.0, 20000);
  CHECK(std::abs(v.real() + std::exp(-integral)) <= 1e-9);
  CHECK(v.real() == doctest::Approx(-std::exp(-kPi * kPi / 8.0)).epsilon(1e-13));
}

TEST_CASE("extremal function equals r exp(integral of psi(t)/t)") {
  const PsiParams p = PsiParams::symmetric(0.5);
  for (double r : {0.25, 0.5, 0.75}) {
    const double integral = testsupport::simpson(
        [&](double t) { return testsupport::psi_over_t(p, t); }, 0.0, r);
    CHECK(std::abs(extremal_eval(p, r).real() - r * std::exp(integral)) <= 1e-10);
    CHECK(extremal_eval(p, r).imag() == 0.0);
  }
}

TEST_CASE("convexity margin") {
  for (const PsiParams& p : testsupport::sample_params()) {
    CHECK(convexity_margin(p, 0.0) == 1.0);
  }
  const PsiParams p = PsiParams::symmetric(0.5);
  CHECK(convexity_margin(p, 0.9) ==
        doctest::Approx(-1.0 + 1.0 / 1.45 + 1.0 / 0.55).epsilon(1e-14));
  CHECK(convexity_margin(p, 0.9) == doctest::Approx(1.507837).epsilon(1e-6));
  // 1 + z psi''/psi' from finite differences of psi.
  const Complex z(0.9, 0.0);
  const double h = 1e-4;
  const Complex d1 = (psi_eval(p, z + h) - psi_eval(p, z - h)) / (2.0 * h);
  const Complex d2 =
      (psi_eval(p, z + h) - 2.0 * psi_eval(p, z) + psi_eval(p, z - h)) / (h * h);
  CHECK(std::abs((1.0 + z * d2 / d1).real() - convexity_margin(p, z)) <= 1e-5);
  CHECK_THROWS_AS(convexity_margin(p, 1.0), PreconditionError);
}

TEST_CASE("convexity margin is positive on dense grids") {
  std::vector<PsiParams> sets = testsupport::sample_params();
  sets.push_back(PsiParams::conjugate_pair(0.9, kPi / 4.0));
  sets.push_back(PsiParams::symmetric(0.99));
  for (const PsiParams& p : sets) {
    for (int i = 1; i <= 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const Complex z = std::polar(0.999 * i / 100.0, testsupport::theta_at(j, 100));
        CHECK(convexity_margin(p, z) > 0.0);
      }
    }
  }
}
