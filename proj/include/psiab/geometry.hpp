#pragma once

#include <span>
#include <variant>
#include <vector>

#include "psiab/complexfn.hpp"

namespace psiab {

/// Shorthand constants of the image domain.
///
/// Symmetric mode uses h1 (real semi-axis) and h2 (imaginary semi-axis).
/// ConjugatePair mode uses k (real centre offset, <= 0), k1 (real semi-axis)
/// and k2 (imaginary semi-axis). When alpha = 1 the unbounded constant (h1 or
/// k2) is +inf and `finite` is false.
struct DomainAxes {
  Mode mode = Mode::Symmetric;
  double h1 = 0.0;
  double h2 = 0.0;
  double k = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  bool finite = true;
};

DomainAxes domain_axes(const PsiParams& p);

struct Ellipse {
  double center = 0.0;
  double semi_real = 0.0;
  double semi_imag = 0.0;
};

struct HorizontalStrip {
  double v_lo = 0.0;
  double v_hi = 0.0;
};

struct VerticalStrip {
  double u_lo = 0.0;
  double u_hi = 0.0;
};

using DomainShape = std::variant<Ellipse, HorizontalStrip, VerticalStrip>;

/// offset + psi(D): the closed-form shape plus a sampled convex boundary.
///
/// The polygon is listed counterclockwise starting at theta = 0 and is
/// star-shaped about the anchor point `offset` (= offset + psi(0)), which lets
/// point queries locate their wedge by binary search. Immutable after
/// construction.
class ImageDomain {
 public:
  ImageDomain(DomainShape shape, double offset, std::vector<double> thetas,
              std::vector<Complex> polygon);

  const DomainShape& shape() const { return shape_; }
  double offset() const { return offset_; }
  std::span<const double> thetas() const { return thetas_; }
  std::span<const Complex> polygon() const { return polygon_; }
  bool has_polygon() const { return !polygon_.empty(); }

  /// Signed distance proxy to the polygon boundary (positive inside). Exact
  /// in sign; the magnitude is the distance to the nearest edge line among
  /// the edges around the query's wedge.
  double polygon_margin(Complex w) const;

  /// Same sign convention, minimum over every edge line. O(n).
  double polygon_margin_exhaustive(Complex w) const;

  /// Signed distance proxy to the closed-form ellipse or strip.
  double analytic_margin(Complex w) const;

  /// Cross products of consecutive edges are all >= -tol.
  bool is_convex(double tol = 1e-12) const;

 private:
  std::size_t wedge_of(Complex w) const;
  double edge_distance(std::size_t i, Complex w) const;

  DomainShape shape_;
  double offset_;
  std::vector<double> thetas_;
  std::vector<Complex> polygon_;
  std::vector<double> angles_;  // vertex polar angles about the anchor
  double angle0_ = 0.0;
};

constexpr int kDefaultPolygonSamples = 4096;
// Boundary samples are taken on |z| = 1 - kBoundaryInset.
constexpr double kBoundaryInset = 1e-9;

ImageDomain image_domain(const PsiParams& p, double offset = 0.0,
                         int samples = kDefaultPolygonSamples);

enum class ContainmentMethod { Analytic, Polygon };

struct ContainmentReport {
  bool inside = false;
  double margin = 0.0;
  ContainmentMethod method = ContainmentMethod::Polygon;
  // Diagnostics from the closed-form shape.
  bool analytic_inside = false;
  double analytic_margin = 0.0;
  bool methods_agree() const { return inside == analytic_inside; }
};

/// Verdict from the polygon when present; strips without a polygon fall back
/// to the analytic inequality.
ContainmentReport contains(const ImageDomain& d, Complex w);

struct DiskRadii {
  double inradius = 0.0;
  double circumradius = 0.0;  // +inf when alpha = 1
};

/// Largest inscribed and smallest circumscribed disk of 1 + psi(D) about 1.
DiskRadii disk_radii(const PsiParams& p);

/// Whether D(a, r) lies in the closed reference disk D(1, h2) (Symmetric) or
/// D(1 + k, k1) (ConjugatePair). Requires 1 in D(a, r).
bool disk_in_domain(const PsiParams& p, double a, double r);

/// Whether p(z) = (1 + Cz)/(1 + Dz) satisfies the admissibility condition for
/// membership; requires -1 < D < C <= 1.
bool janowski_admissible(const PsiParams& p, double c, double d);

/// Image disk D(a, r) of the unit disk under (1 + Cz)/(1 + Dz).
struct MobiusDisk {
  double center = 0.0;
  double radius = 0.0;
};
MobiusDisk janowski_disk(double c, double d);

/// How far the sampled boundary psi(dD) strays from the closed-form ellipse.
struct EllipseDeviation {
  // max |1 - ((u - c)/a)^2 - (v/b)^2| over boundary samples
  double max_level = 0.0;
  // max radial distance between a boundary sample and the ellipse
  double max_distance = 0.0;
  double worst_theta = 0.0;
};

/// Requires alpha < 1.
EllipseDeviation ellipse_deviation(const PsiParams& p,
                                   int samples = kDefaultPolygonSamples);

}  // namespace psiab
