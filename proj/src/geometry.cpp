#include "psiab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "psiab/errors.hpp"
#include "psiab/oracle.hpp"

namespace psiab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kWedgeNeighbours = 8;

double cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double wrap_angle(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

}  // namespace

DomainAxes domain_axes(const PsiParams& p) {
  DomainAxes axes;
  axes.mode = p.mode();
  axes.finite = !p.is_unbounded();
  const double alpha = p.alpha();
  const double one_minus_a2 = (1.0 - alpha) * (1.0 + alpha);
  if (p.is_symmetric()) {
    // (1/2a) log((1+a)/(1-a)) = atanh(a)/a, (1/2a) asin(2a/(1+a^2)) = atan(a)/a
    axes.h1 = axes.finite ? std::atanh(alpha) / alpha : kInf;
    axes.h2 = std::atan(alpha) / alpha;
    return axes;
  }
  // The square-root term 1 + a^4 - 2 a^2 cos 2g equals (1-a^2)^2 + 4 a^2 sin^2 g,
  // so the asin and atan of the closed forms become atan2 calls that stay
  // accurate as alpha -> 1 or gamma -> 0.
  const double s = std::sin(p.gamma());
  const double two_a_s = 2.0 * alpha * s;
  const double sin2g = std::sin(2.0 * p.gamma());
  axes.k1 = std::atan2(two_a_s, one_minus_a2) / two_a_s;
  axes.k = -std::atan2(alpha * alpha * sin2g,
                       one_minus_a2 + 2.0 * alpha * alpha * s * s) /
           two_a_s;
  if (axes.finite) {
    const double root = std::hypot(one_minus_a2, two_a_s);
    axes.k2 = std::log((root + two_a_s) / one_minus_a2) / two_a_s;
  } else {
    axes.k2 = kInf;
  }
  return axes;
}

ImageDomain::ImageDomain(DomainShape shape, double offset,
                         std::vector<double> thetas,
                         std::vector<Complex> polygon)
    : shape_(shape),
      offset_(offset),
      thetas_(std::move(thetas)),
      polygon_(std::move(polygon)) {
  if (polygon_.empty()) return;
  if (polygon_.size() < 3) {
    throw InconsistencyError("ImageDomain: polygon needs at least 3 vertices");
  }
  const Complex anchor(offset_, 0.0);
  angle0_ = std::arg(polygon_.front() - anchor);
  angles_.reserve(polygon_.size());
  for (const Complex& v : polygon_) {
    angles_.push_back(wrap_angle(std::arg(v - anchor) - angle0_));
  }
  angles_.front() = 0.0;
  for (std::size_t i = 1; i < angles_.size(); ++i) {
    if (!(angles_[i] > angles_[i - 1])) {
      throw InconsistencyError(
          "ImageDomain: polygon is not star-shaped about its anchor");
    }
  }
}

std::size_t ImageDomain::wedge_of(Complex w) const {
  const Complex anchor(offset_, 0.0);
  const double phi = wrap_angle(std::arg(w - anchor) - angle0_);
  auto it = std::upper_bound(angles_.begin(), angles_.end(), phi);
  if (it == angles_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(angles_.begin(), it) - 1);
}

double ImageDomain::edge_distance(std::size_t i, Complex w) const {
  const Complex p0 = polygon_[i];
  const Complex p1 = polygon_[(i + 1) % polygon_.size()];
  const Complex edge = p1 - p0;
  return cross(edge, w - p0) / std::abs(edge);
}

double ImageDomain::polygon_margin(Complex w) const {
  if (polygon_.size() < 3) {
    throw InconsistencyError("ImageDomain: degenerate polygon");
  }
  const auto n = static_cast<std::ptrdiff_t>(polygon_.size());
  const auto wedge = static_cast<std::ptrdiff_t>(wedge_of(w));
  double margin = edge_distance(static_cast<std::size_t>(wedge), w);
  for (std::ptrdiff_t k = 1; k <= kWedgeNeighbours; ++k) {
    const auto before = static_cast<std::size_t>(((wedge - k) % n + n) % n);
    const auto after = static_cast<std::size_t>((wedge + k) % n);
    margin = std::min({margin, edge_distance(before, w),
                       edge_distance(after, w)});
  }
  return margin;
}

double ImageDomain::polygon_margin_exhaustive(Complex w) const {
  if (polygon_.size() < 3) {
    throw InconsistencyError("ImageDomain: degenerate polygon");
  }
  double margin = kInf;
  for (std::size_t i = 0; i < polygon_.size(); ++i) {
    margin = std::min(margin, edge_distance(i, w));
  }
  return margin;
}

double ImageDomain::analytic_margin(Complex w) const {
  struct Visitor {
    Complex w;
    double operator()(const Ellipse& e) const {
      const Complex rel = w - Complex(e.center, 0.0);
      const double x = rel.real() / e.semi_real;
      const double y = rel.imag() / e.semi_imag;
      const double level = std::sqrt(x * x + y * y);
      if (level < 1e-12) return std::min(e.semi_real, e.semi_imag);
      // distance along the ray from the centre
      return (1.0 - level) * std::abs(rel) / level;
    }
    double operator()(const HorizontalStrip& s) const {
      return std::min(w.imag() - s.v_lo, s.v_hi - w.imag());
    }
    double operator()(const VerticalStrip& s) const {
      return std::min(w.real() - s.u_lo, s.u_hi - w.real());
    }
  };
  return std::visit(Visitor{w}, shape_);
}

bool ImageDomain::is_convex(double tol) const {
  const std::size_t n = polygon_.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e0 = polygon_[(i + 1) % n] - polygon_[i];
    const Complex e1 = polygon_[(i + 2) % n] - polygon_[(i + 1) % n];
    if (cross(e0, e1) < -tol * std::abs(e0) * std::abs(e1)) return false;
  }
  return true;
}

ImageDomain image_domain(const PsiParams& p, double offset, int samples) {
  if (samples < 64) throw PreconditionError("image_domain: samples < 64");
  const DomainAxes axes = domain_axes(p);
  DomainShape shape;
  if (axes.finite) {
    shape = p.is_symmetric() ? Ellipse{offset, axes.h1, axes.h2}
                             : Ellipse{offset + axes.k, axes.k1, axes.k2};
  } else if (p.is_symmetric()) {
    shape = HorizontalStrip{-kPi / 4.0, kPi / 4.0};
  } else {
    const double denom = 2.0 * std::sin(p.gamma());
    shape = VerticalStrip{offset + (p.gamma() - kPi) / denom,
                          offset + p.gamma() / denom};
  }

  std::vector<double> thetas(static_cast<std::size_t>(samples));
  std::vector<Complex> polygon(thetas.size());
  const double radius = 1.0 - kBoundaryInset;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    thetas[j] = kTwoPi * static_cast<double>(j) / samples;
    const Complex z = j == 0 ? Complex(radius, 0.0) : std::polar(radius, thetas[j]);
    polygon[j] = offset + psi_eval(p, z);
  }
  return ImageDomain(shape, offset, std::move(thetas), std::move(polygon));
}

ContainmentReport contains(const ImageDomain& d, Complex w) {
  ContainmentReport report;
  report.analytic_margin = d.analytic_margin(w);
  report.analytic_inside = report.analytic_margin > 0.0;
  if (d.has_polygon()) {
    report.method = ContainmentMethod::Polygon;
    report.margin = d.polygon_margin(w);
  } else {
    if (std::holds_alternative<Ellipse>(d.shape())) {
      throw InconsistencyError("contains: ellipse domain without a polygon");
    }
    report.method = ContainmentMethod::Analytic;
    report.margin = report.analytic_margin;
  }
  report.inside = report.margin > 0.0;
  return report;
}

DiskRadii disk_radii(const PsiParams& p) {
  const DomainAxes axes = domain_axes(p);
  if (p.is_symmetric()) return {axes.h2, axes.h1};
  DiskRadii radii{axes.k1 + axes.k, kInf};
  if (axes.finite) {
    // The farthest boundary point sits on the negative real axis for small
    // gamma and moves off-axis towards the imaginary axis as gamma -> pi/2.
    radii.circumradius =
        oracle::max_on_circle(
            [&p](double t) { return std::abs(psi_eval(p, std::polar(1.0, t))); })
            .value;
  }
  return radii;
}

bool disk_in_domain(const PsiParams& p, double a, double r) {
  if (!(std::abs(1.0 - a) < r)) {
    throw PreconditionError("disk_in_domain: 1 must lie in D(a, r)");
  }
  const DomainAxes axes = domain_axes(p);
  if (p.is_symmetric()) return std::abs(a - 1.0) + r <= axes.h2;
  return std::abs(a - (1.0 + axes.k)) + r <= axes.k1;
}

MobiusDisk janowski_disk(double c, double d) {
  const double denom = (1.0 - d) * (1.0 + d);
  return {(1.0 - c * d) / denom, (c - d) / denom};
}

bool janowski_admissible(const PsiParams& p, double c, double d) {
  if (!(-1.0 < d && d < c && c <= 1.0)) {
    throw PreconditionError("janowski_admissible: requires -1 < D < C <= 1");
  }
  const DomainAxes axes = domain_axes(p);
  const double center = janowski_disk(c, d).center;
  if (p.is_symmetric()) {
    const double h2 = axes.h2;
    return center <= 1.0 ? c <= h2 + (1.0 - h2) * d : c <= h2 + (1.0 + h2) * d;
  }
  const double k = axes.k;
  const double k1 = axes.k1;
  return center <= 1.0 + k ? c <= k1 - k + (1.0 - k1 + k) * d
                           : c <= k1 + k + (1.0 + k1 + k) * d;
}

EllipseDeviation ellipse_deviation(const PsiParams& p, int samples) {
  if (p.is_unbounded()) {
    throw PreconditionError("ellipse_deviation: requires alpha < 1");
  }
  const ImageDomain d = image_domain(p, 0.0, std::max(samples, 64));
  const auto& e = std::get<Ellipse>(d.shape());
  EllipseDeviation dev;
  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    const Complex w = psi_eval(p, std::polar(1.0, theta));
    const Complex rel = w - Complex(e.center, 0.0);
    const double x = rel.real() / e.semi_real;
    const double y = rel.imag() / e.semi_imag;
    const double level2 = x * x + y * y;
    const double distance = std::abs(rel) * std::abs(1.0 - 1.0 / std::sqrt(level2));
    dev.max_level = std::max(dev.max_level, std::abs(1.0 - level2));
    if (distance > dev.max_distance) {
      dev.max_distance = distance;
      dev.worst_theta = theta;
    }
  }
  return dev;
}

}  // namespace psiab
