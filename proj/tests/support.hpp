#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// library's own oracle module so that a bug there cannot hide a bug elsewhere.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "psiab/complexfn.hpp"

namespace testsupport {

using psiab::Complex;
using psiab::PsiParams;

constexpr double kPi = std::numbers::pi;

inline double theta_at(int j, int n) { return 2.0 * kPi * j / n; }

// Dense grid extremum of a 2 pi-periodic function.
inline double grid_max(const std::function<double(double)>& g, int n = 100000) {
  double best = -INFINITY;
  for (int j = 0; j < n; ++j) best = std::max(best, g(theta_at(j, n)));
  return best;
}

inline double grid_min(const std::function<double(double)>& g, int n = 100000) {
  double best = INFINITY;
  for (int j = 0; j < n; ++j) best = std::min(best, g(theta_at(j, n)));
  return best;
}

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 4000) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

// psi(t)/t on the real axis, extended by 1 at t = 0.
inline double psi_over_t(const PsiParams& p, double t) {
  return t == 0.0 ? 1.0 : psi_eval(p, Complex(t, 0.0)).real() / t;
}

// Plain partial sum of sum z^k/k^2.
inline Complex dilog_partial_sum(Complex z, int terms) {
  Complex sum = 0.0;
  Complex power = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power *= z;
    sum += power / (static_cast<double>(k) * k);
  }
  return sum;
}

// sum (-1)^k / k^2 through repeated averaging of partial sums (Euler's
// transformation in its simplest form).
inline double alternating_dilog_minus_one() {
  constexpr int n = 40;
  std::vector<double> s(n);
  double partial = 0.0;
  for (int k = 1; k <= n; ++k) {
    partial += (k % 2 == 1 ? -1.0 : 1.0) / (static_cast<double>(k) * k);
    s[k - 1] = partial;
  }
  for (int level = 0; level < n - 1; ++level) {
    for (int i = 0; i + 1 < n - level; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
  }
  return s[0];
}

// C_n from the discrete Cauchy integral of psi on |z| = r.
inline double cauchy_coefficient(const PsiParams& p, int n, double r,
                                 int nodes = 512) {
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = theta_at(j, nodes);
    acc += psi_eval(p, std::polar(r, t)) * std::polar(1.0, -n * t);
  }
  const double a_n = (acc / static_cast<double>(nodes)).real() / std::pow(r, n);
  return n % 2 == 1 ? a_n : -a_n;  // psi = sum (-1)^{n+1} C_n z^n
}

// Even-odd ray casting; true for points strictly inside a simple polygon.
inline bool ray_cast_inside(const std::vector<Complex>& poly, Complex w) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = poly[i];
    const Complex b = poly[j];
    if ((a.imag() > w.imag()) != (b.imag() > w.imag())) {
      const double x = a.real() + (w.imag() - a.imag()) * (b.real() - a.real()) /
                                      (b.imag() - a.imag());
      if (w.real() < x) inside = !inside;
    }
  }
  return inside;
}

// Minimum over |z| = r of Re(1 + psi(z)) by a dense grid.
inline double min_order_on_circle(const PsiParams& p, double r, int n = 20000) {
  return grid_min([&](double t) { return 1.0 + psi_eval(p, std::polar(r, t)).real(); },
                  n);
}

// Plain bisection on a sign change, independent of the library root finder.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int steps = 80) {
  double flo = f(lo);
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::vector<PsiParams> sample_params() {
  return {PsiParams::symmetric(0.25), PsiParams::symmetric(0.5),
          PsiParams::symmetric(0.9),  PsiParams::conjugate_pair(0.5, kPi / 3.0),
          PsiParams::conjugate_pair(0.5, kPi / 2.0),
          PsiParams::conjugate_pair(0.8, kPi / 6.0)};
}

}  // namespace testsupport
