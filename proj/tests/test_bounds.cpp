#include <doctest.h>

#include <cmath>
#include <random>

#include "psiab/bounds.hpp"
#include "psiab/errors.hpp"
#include "psiab/radii.hpp"
#include "support.hpp"

using namespace psiab;
using testsupport::kPi;

TEST_CASE("symmetric envelope on the unit circle") {
  const PsiParams p = PsiParams::symmetric(0.5);
  const BoundEnvelope e = envelope(p, 1.0);
  CHECK(e.re_hi == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(e.im_hi == doctest::Approx(std::asin(0.8)).epsilon(1e-15));
  CHECK(e.re_lo == -e.re_hi);
  CHECK(e.im_lo == -e.im_hi);
  CHECK_FALSE(e.conjugate.has_value());
  const double re = testsupport::grid_max(
      [&](double t) { return psi_eval(p, std::polar(1.0, t)).real(); });
  const double im = testsupport::grid_max(
      [&](double t) { return psi_eval(p, std::polar(1.0, t)).imag(); });
  CHECK(std::abs(re - e.re_hi) <= 1e-12);
  CHECK(std::abs(im - e.im_hi) <= 1e-9);
}

TEST_CASE("conjugate envelope at gamma = pi/2") {
  const PsiParams p = PsiParams::conjugate_pair(0.5, kPi / 2.0);
  const BoundEnvelope e = envelope(p, 1.0);
  REQUIRE(e.conjugate.has_value());
  CHECK(e.conjugate->eta == doctest::Approx(std::asin(0.8)).epsilon(1e-14));
  CHECK(std::abs(e.conjugate->tau) <= 1e-16);
  CHECK(e.conjugate->t1 == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.conjugate->t2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(e.im_hi == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(e.im_lo == doctest::Approx(-std::log(3.0)).epsilon(1e-14));
  const double im = testsupport::grid_max(
      [&](double t) { return psi_eval(p, std::polar(1.0, t)).imag(); });
  CHECK(std::abs(im - e.im_hi) <= 1e-9);
}

TEST_CASE("envelope shrinks to the origin and validates r") {
  for (const PsiParams& p : testsupport::sample_params()) {
    const BoundEnvelope e = envelope(p, 1e-9);
    CHECK(std::abs(e.re_lo) < 1e-8);
    CHECK(std::abs(e.re_hi) < 1e-8);
    CHECK(std::abs(e.im_lo) < 1e-8);
    CHECK(std::abs(e.im_hi) < 1e-8);
    CHECK_THROWS_AS(envelope(p, 0.0), PreconditionError);
    CHECK_THROWS_AS(envelope(p, 1.5), PreconditionError);
  }
  const BoundEnvelope unbounded = envelope(PsiParams::symmetric(1.0), 1.0);
  CHECK(std::isinf(unbounded.re_hi));
  CHECK(unbounded.im_hi == doctest::Approx(kPi / 4.0));
}

TEST_CASE("envelope ordering and real-axis attainment") {
  std::vector<PsiParams> sets = testsupport::sample_params();
  sets.push_back(PsiParams::symmetric(1.0));
  sets.push_back(PsiParams::conjugate_pair(1.0, kPi / 4.0));
  for (const PsiParams& p : sets) {
    for (double r : {0.25, 0.5, 0.75, 0.99}) {
      const BoundEnvelope e = envelope(p, r);
      CHECK(e.re_lo <= 0.0);
      CHECK(e.re_hi >= 0.0);
      CHECK(e.im_lo <= 0.0);
      CHECK(e.im_hi >= 0.0);
      CHECK(std::abs(e.re_hi - psi_eval(p, r).real()) <= 1e-12);
      CHECK(std::abs(e.re_lo - psi_eval(p, -r).real()) <= 1e-12);
      if (p.is_symmetric()) {
        const double a = p.alpha();
        CHECK(e.re_hi == doctest::Approx(std::log((1 + a * r) / (1 - a * r)) / (2 * a)));
        CHECK(e.im_hi ==
              doctest::Approx(std::asin(2 * a * r / (1 + a * a * r * r)) / (2 * a)));
      }
    }
  }
}

TEST_CASE("Schwarz-type probes stay inside the envelope") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<PsiParams> sets = testsupport::sample_params();
  for (int k = 0; k < 1000; ++k) {
    const PsiParams& p = sets[k % sets.size()];
    const double r = std::array{0.25, 0.5, 0.75, 0.99}[k % 4];
    const BoundEnvelope e = envelope(p, r);
    // w(z) = z u(z) with u a rotated Blaschke factor, or a rational map with
    // |u| <= 1 built from two factors.
    const Complex a = std::polar(0.9 * u(rng), 2 * kPi * u(rng));
    const Complex b = std::polar(0.9 * u(rng), 2 * kPi * u(rng));
    const Complex rot = std::polar(1.0, 2 * kPi * u(rng));
    const bool two = k % 2 == 1;
    for (int j = 0; j < 256; ++j) {
      const Complex z = std::polar(r, testsupport::theta_at(j, 256));
      Complex w = rot * z * (z - a) / (1.0 - std::conj(a) * z);
      if (two) w *= (z - b) / (1.0 - std::conj(b) * z);
      const Complex v = psi_eval(p, w);
      CHECK(v.real() >= e.re_lo - 1e-12);
      CHECK(v.real() <= e.re_hi + 1e-12);
      CHECK(v.imag() >= e.im_lo - 1e-12);
      CHECK(v.imag() <= e.im_hi + 1e-12);
    }
  }
}

TEST_CASE("envelope and growth are increasing in r") {
  for (const PsiParams& p : testsupport::sample_params()) {
    double re = -1, im = -1, up = -1;
    for (int i = 1; i < 100; ++i) {
      const double r = i / 100.0;
      const BoundEnvelope e = envelope(p, r);
      const double upper = extremal_eval(p, r).real();
      CHECK(e.re_hi > re);
      CHECK(e.im_hi > im);
      CHECK(upper > up);
      re = e.re_hi;
      im = e.im_hi;
      up = upper;
    }
  }
}

TEST_CASE("growth sandwich and the M identity") {
  for (const PsiParams& p : testsupport::sample_params()) {
    for (double r : {0.2, 0.5, 0.8}) {
      const GrowthBounds g = growth(p, r);
      CHECK(g.lower <= g.upper);
      CHECK(std::abs(g.ratio_upper * r - extremal_eval(p, r).real()) <= 1e-10);
      CHECK(std::abs(g.ratio_lower * r - g.lower) <= 1e-10);
      for (int j = 0; j < 1000; ++j) {
        const double m = std::abs(extremal_eval(p, std::polar(r, testsupport::theta_at(j, 1000))));
        CHECK(m >= g.lower - 1e-12);
        CHECK(m <= g.upper + 1e-12);
      }
    }
  }
}

TEST_CASE("growth against quadrature and limits") {
  const PsiParams p = PsiParams::symmetric(0.5);
  const GrowthBounds g = growth(p, 0.5);
  const double integral = testsupport::simpson(
      [&](double t) { return testsupport::psi_over_t(p, t); }, 0.0, 0.5);
  CHECK(std::abs(g.upper / 0.5 - std::exp(integral)) <= 1e-10);

  const GrowthBounds tiny = growth(p, 1e-8);
  CHECK(tiny.ratio_lower == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(tiny.ratio_upper == doctest::Approx(1.0).epsilon(1e-7));

  const GrowthBounds edge = growth(PsiParams::symmetric(1.0), 1.0 - 1e-7);
  CHECK(std::abs(edge.lower - std::exp(-kPi * kPi / 8.0)) <= 1e-5);
  CHECK_THROWS_AS(growth(p, 1.0), PreconditionError);
}

TEST_CASE("derivative and length bounds hold for the extremal function") {
  for (const PsiParams& p : testsupport::sample_params()) {
    for (double r : {0.3, 0.6, 0.9}) {
      const GrowthBounds g = growth(p, r);
      const double h = 1e-6;
      double lo = INFINITY, hi = 0.0;
      for (int j = 0; j < 720; ++j) {
        const Complex z = std::polar(r, testsupport::theta_at(j, 720));
        const Complex dz = h * z / std::abs(z);
        const double d = std::abs((extremal_eval(p, z + dz) - extremal_eval(p, z - dz)) /
                                  (2.0 * dz));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      CHECK(lo >= g.deriv_lower - 1e-7);
      CHECK(hi <= g.deriv_upper + 1e-7);
      CHECK(g.length_lower == doctest::Approx(2 * kPi * r * g.deriv_lower));
      CHECK(g.length_upper == doctest::Approx(2 * kPi * r * g.deriv_upper));
      // Inside r0 the lower bound is attained at z = -r.
      if (1.0 + envelope(p, r).re_lo < 0.0) continue;
      const double at_minus = std::abs(
          (extremal_eval(p, -r + h) - extremal_eval(p, -r - h)) / (2.0 * h));
      CHECK(std::abs(at_minus - g.deriv_lower) <= 1e-7);
    }
  }
}

TEST_CASE("covering constant") {
  CHECK(covering_constant(PsiParams::symmetric(1.0)) ==
        doctest::Approx(std::exp(-kPi * kPi / 8.0)).epsilon(1e-13));
  const double small = covering_constant(PsiParams::symmetric(0.01));
  CHECK(small >= 0.36);
  CHECK(small <= 0.37);
  const PsiParams c = PsiParams::conjugate_pair(0.5, kPi / 3.0);
  const double integral = testsupport::simpson(
      [&](double t) { return testsupport::psi_over_t(c, t); }, -1.0, 0.0);
  CHECK(std::abs(covering_constant(c) - std::exp(-integral)) <= 1e-10);
  CHECK(covering_constant(c) > 0.0);
}

TEST_CASE("argument bound dominates sampled arguments") {
  CHECK(arg_bound(PsiParams::symmetric(0.5), 1e-9) < 1e-8);
  std::vector<PsiParams> sets = testsupport::sample_params();
  sets.push_back(PsiParams::conjugate_pair(1.0, kPi / 4.0));
  for (const PsiParams& p : sets) {
    const double r0 = univalence_radius(p).value;
    for (double frac : {0.25, 0.5, 0.9, 0.999}) {
      const double r = frac * r0;
      const double bound = arg_bound(p, r);
      double sampled = 0.0;
      for (int i = 1; i <= 20; ++i) {
        const double s = r * i / 20.0;
        sampled = std::max(sampled, testsupport::grid_max(
                                        [&](double t) {
                                          return std::abs(std::arg(
                                              1.0 + psi_eval(p, std::polar(s, t))));
                                        },
                                        2000));
      }
      CAPTURE(p.alpha());
      CAPTURE(p.gamma());
      CAPTURE(frac);
      CHECK(sampled <= bound + 1e-12);
    }
    if (r0 < 1.0) {
      CHECK(arg_bound(p, r0) == doctest::Approx(kPi / 2.0).epsilon(1e-5));
      CHECK_THROWS_AS(arg_bound(p, std::min(1.0, r0 * 1.01)), PreconditionError);
    }
  }
}
