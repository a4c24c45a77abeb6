#include "psiab/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "psiab/errors.hpp"
#include "psiab/geometry.hpp"

namespace psiab::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxBisections = 200;
constexpr std::size_t kMaxQuadIntervals = 5000;

// 15-point Kronrod nodes (descending, last is the centre) and weights; the
// embedded 7-point Gauss rule uses the odd-indexed nodes and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const RealFn& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

bool same_sign(double x, double y) { return (x > 0.0) == (y > 0.0); }

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

BracketedRoot find_root(const RealFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw PreconditionError("find_root: requires lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw BracketError("find_root: NaN at a bracket endpoint");
  }
  BracketedRoot out{lo, hi, lo, std::abs(flo), 0};
  if (flo == 0.0) return out;
  if (fhi == 0.0) return {lo, hi, hi, 0.0, 0};
  if (same_sign(flo, fhi)) {
    throw BracketError("find_root: no sign change on [lo, hi]");
  }
  int it = 0;
  for (; it < kMaxBisections; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) {
      return {lo, hi, mid, 0.0, it + 1};
    }
    if (same_sign(fm, flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    if (hi - lo <= tol && std::min(std::abs(flo), std::abs(fhi)) <= tol) {
      ++it;
      break;
    }
  }
  out.lo = lo;
  out.hi = hi;
  out.iterations = it;
  if (std::abs(flo) <= std::abs(fhi)) {
    out.root = lo;
    out.residual = std::abs(flo);
  } else {
    out.root = hi;
    out.residual = std::abs(fhi);
  }
  return out;
}

double integrate(const RealFn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, tol);
  std::priority_queue<Segment> work;
  Segment first = gauss_kronrod(f, a, b);
  double error = first.error;
  work.push(first);
  while (!(error <= tol)) {
    if (!std::isfinite(error)) {
      throw AccuracyError("integrate: non-finite integrand or error estimate");
    }
    if (work.size() >= kMaxQuadIntervals) {
      throw AccuracyError("integrate: subdivision budget exhausted");
    }
    const Segment worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw AccuracyError("integrate: interval cannot be split further");
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
  }
  // Re-sum from the pieces to drop the running-update rounding.
  double sum = 0.0;
  std::vector<Segment> pieces;
  pieces.reserve(work.size());
  while (!work.empty()) {
    pieces.push_back(work.top());
    work.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const Segment& s : pieces) sum += s.value;
  return sum;
}

CircleExtremum golden_max(const RealFn& g, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    }
  }
  return g1 >= g2 ? CircleExtremum{x1, g1} : CircleExtremum{x2, g2};
}

CircleExtremum max_on_circle(const RealFn& g, int samples) {
  if (samples < 64) throw PreconditionError("max_on_circle: samples < 64");
  const double step = kTwoPi / samples;
  CircleExtremum best{0.0, g(0.0)};
  for (int j = 1; j < samples; ++j) {
    const double t = step * j;
    const double v = g(t);
    if (v > best.value) best = {t, v};
  }
  const CircleExtremum refined =
      golden_max(g, best.theta - step, best.theta + step);
  if (refined.value > best.value) best = refined;
  best.theta = wrap_angle(best.theta);
  return best;
}

CircleExtremum min_on_circle(const RealFn& g, int samples) {
  CircleExtremum m = max_on_circle([&g](double t) { return -g(t); }, samples);
  m.value = -m.value;
  return m;
}

double curve_margin(const RadialCurve& curve, const ImageDomain& d, double r,
                    int angular_samples) {
  double margin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < angular_samples; ++j) {
    const Complex w = curve(r, kTwoPi * j / angular_samples);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      return -std::numeric_limits<double>::infinity();
    }
    margin = std::min(margin, contains(d, w).margin);
  }
  return margin;
}

double containment_radius(const RadialCurve& curve, const ImageDomain& d,
                          double tol, const ContainmentOptions& options) {
  if (options.probe_radii < 2 || options.angular_samples < 64) {
    throw PreconditionError("containment_radius: invalid options");
  }
  const double r_max = 1.0 - kBoundaryInset;
  auto margin = [&](double r) {
    return curve_margin(curve, d, r, options.angular_samples);
  };
  if (!(margin(0.0) > 0.0)) {
    throw PreconditionError("containment_radius: curve(0, .) is not interior");
  }
  double prev_r = 0.0;
  double prev_m = margin(0.0);
  for (int i = 1; i <= options.probe_radii; ++i) {
    const double r = r_max * i / options.probe_radii;
    const double m = margin(r);
    if (m > prev_m + options.monotone_slack) {
      throw InconsistencyError(
          "containment_radius: margin is not monotone in r");
    }
    if (m <= 0.0) {
      return find_root(margin, prev_r, r, tol).root;
    }
    prev_r = r;
    prev_m = m;
  }
  return 1.0;
}

SweepGrid sweep(std::string parameter, double lo, double hi, int count,
                const RealFn& f) {
  if (count < 2 || !(lo < hi)) {
    throw PreconditionError("sweep: requires count >= 2 and lo < hi");
  }
  SweepGrid grid{std::move(parameter), lo, hi, count, {}, {}};
  grid.values.reserve(static_cast<std::size_t>(count));
  grid.evaluations.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
    grid.values.push_back(x);
    grid.evaluations.push_back(f(x));
  }
  return grid;
}

}  // namespace psiab::oracle
