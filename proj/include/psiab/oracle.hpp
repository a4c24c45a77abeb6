#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psiab/complexfn.hpp"

namespace psiab {

class ImageDomain;

namespace oracle {

using RealFn = std::function<double(double)>;

struct BracketedRoot {
  double lo = 0.0;
  double hi = 0.0;
  double root = 0.0;
  double residual = 0.0;  // |f(root)|
  int iterations = 0;
};

/// Bisection on a sign-changing bracket.
///
/// Stops once the bracket is narrower than `tol` and |f(root)| <= tol, or when
/// the bracket can no longer be split in double precision; at most 200
/// halvings. Throws BracketError when f(lo) f(hi) > 0.
BracketedRoot find_root(const RealFn& f, double lo, double hi,
                        double tol = 1e-12);

/// Adaptive Gauss-Kronrod (7/15) quadrature to absolute error `tol`.
/// Throws AccuracyError once the subdivision budget is exhausted.
double integrate(const RealFn& f, double a, double b, double tol = 1e-12);

struct CircleExtremum {
  double theta = 0.0;
  double value = 0.0;
};

/// Maximum of a 2 pi-periodic function: grid scan with `samples` points, then
/// golden-section refinement around the best grid point.
CircleExtremum max_on_circle(const RealFn& g, int samples = 4096);
CircleExtremum min_on_circle(const RealFn& g, int samples = 4096);

/// Golden-section maximisation of a unimodal function on [lo, hi].
CircleExtremum golden_max(const RealFn& g, double lo, double hi,
                          double tol = 1e-12);

/// Maps (r, theta) to a point; curve(0, theta) must be interior to the domain.
using RadialCurve = std::function<Complex(double r, double theta)>;

struct ContainmentOptions {
  int angular_samples = 4096;
  int probe_radii = 16;
  // Allowed growth of the minimum margin between consecutive probe radii.
  double monotone_slack = 1e-9;
};

/// Smallest containment margin of the closed curve {curve(r, theta)} in `d`.
double curve_margin(const RadialCurve& curve, const ImageDomain& d, double r,
                    int angular_samples = 4096);

/// Largest r in (0, 1) with curve(r, theta) inside `d` for every theta on the
/// angular grid. The minimum margin is probed at `probe_radii` radii first and
/// must be non-increasing in r; otherwise InconsistencyError.
double containment_radius(const RadialCurve& curve, const ImageDomain& d,
                          double tol = 1e-12,
                          const ContainmentOptions& options = {});

/// Values of a scalar function on an evenly spaced grid.
struct SweepGrid {
  std::string parameter;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  std::vector<double> values;
  std::vector<double> evaluations;
};

/// Requires count >= 2 and lo < hi.
SweepGrid sweep(std::string parameter, double lo, double hi, int count,
                const RealFn& f);

}  // namespace oracle
}  // namespace psiab
