#pragma once

#include <string>
#include <vector>

#include "psiab/complexfn.hpp"

namespace psiab::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// "PASS  3  name: detail"
std::string format(const CheckResult& check);

/// The numbered acceptance criteria, in order. `tol` drives the oracle root
/// searches; pass/fail thresholds are fixed per criterion.
std::vector<CheckResult> acceptance_checks(double tol = 1e-12);

/// Runs a single acceptance criterion (1-based id).
CheckResult acceptance_check(int id, double tol = 1e-12);

constexpr int kAcceptanceCount = 11;

/// Radius results at one alpha against the containment and sampling oracles.
std::vector<CheckResult> radii_checks(double alpha, double tol = 1e-12);

/// Root of (min over |z| = r of Re(1 + psi(z))) = delta, with the minimum taken
/// by circle sampling. Throws BracketError when the order stays above delta on
/// the whole disk.
double sampled_starlike_root(const PsiParams& p, double delta,
                             double tol = 1e-12);

struct EllipseMeasurement {
  double alpha = 0.0;
  double max_level = 0.0;
  double max_distance = 0.0;
  double worst_theta = 0.0;
  int points = 0;
  // Grid points whose polygon margin exceeds `threshold` in magnitude yet get
  // opposite verdicts from the polygon and the closed-form ellipse.
  int disagreements = 0;
  double threshold = 1e-3;
};

/// Compares the sampled boundary psi(dD) with the closed-form ellipse in
/// Symmetric mode on a grid x grid box around the ellipse.
EllipseMeasurement measure_ellipse(double alpha, int grid = 201,
                                   double threshold = 1e-3);

}  // namespace psiab::verify
