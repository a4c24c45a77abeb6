#include "psiab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psiab/bounds.hpp"
#include "psiab/complexfn.hpp"
#include "psiab/errors.hpp"
#include "psiab/geometry.hpp"
#include "psiab/oracle.hpp"
#include "psiab/radii.hpp"
#include "psiab/verify.hpp"

namespace psiab {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultTol = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string target;
  std::string mode = "sym";
  double alpha = 0.5;
  double gamma = kPi / 2.0;
  bool gamma_set = false;
  std::string z = "0";
  int n = 1;
  double r = 0.5;
  double c = 0.5;
  double d = 0.0;
  double center = 1.0;
  bool center_set = false;
  double disk_radius = 0.0;
  bool disk_radius_set = false;
  double delta = 0.0;
  double beta = 0.5;
  double alpha_class = 0.0;
  bool alpha_class_set = false;
  int samples = kDefaultPolygonSamples;
  int grid = 50;
  double tol = kDefaultTol;
  bool tol_set = false;
  std::string out_path;
  std::string out_dir = ".";
  bool report = false;
};

json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0.0 ? "inf" : "-inf";
}

json complex_json(Complex w) { return {{"re", num(w.real())}, {"im", num(w.imag())}}; }

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("--z expects 're' or 're,im'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("--z expects 're,im'");
  }
  std::string rest;
  if (in >> rest) throw UsageError("--z expects 're,im'");
  return {re, im};
}

bool is_conjugate(const Options& o) {
  return o.mode == "conj" || o.mode == "conjugate";
}

PsiParams make_params(const Options& o) {
  try {
    if (is_conjugate(o)) {
      if (!o.gamma_set) throw UsageError("conjugate mode requires --gamma");
      return PsiParams::conjugate_pair(o.alpha, o.gamma);
    }
    return PsiParams::symmetric(o.alpha);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

json params_json(const PsiParams& p) {
  json j;
  j["mode"] = to_string(p.mode());
  j["alpha"] = p.alpha();
  if (!p.is_symmetric()) j["gamma"] = p.gamma();
  return j;
}

json defaults_json(const Options& o) {
  return {{"samples", o.samples}, {"tol", o.tol}};
}

void emit(const json& record, const Options& o, std::ostream& out) {
  const std::string text = record.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out_path);
  file << text;
}

json radius_json(const RadiusResult& r) {
  return {{"value", num(r.value)},
          {"branch", to_string(r.branch)},
          {"formula", r.formula},
          {"equation_residual", num(r.equation_residual)},
          {"sharp", r.sharp},
          {"sharpness_margin", num(r.sharpness_margin)},
          {"inner_margin", num(r.inner_margin)},
          {"iterations", r.iterations}};
}

struct EvalResult {
  json value;
  std::string paper_ref;
};

EvalResult eval_quantity(const Options& o, json& input) {
  const std::string& q = o.target;
  // Quantities that do not depend on (A, B).
  if (q == "dilog") {
    const Complex z = parse_complex(o.z);
    input["z"] = complex_json(z);
    return {complex_json(dilog(z)), "Spence's function Li_2 on the principal branch"};
  }
  if (q == "gamma0") {
    return {num(gamma0()), "root of 2 sin(gamma) = pi - gamma, where g(1, gamma) = 0"};
  }
  if (q == "g") {
    input["alpha"] = o.alpha;
    input["gamma"] = o.gamma;
    return {num(g_func(o.alpha, o.gamma)),
            "order of starlikeness g(alpha, gamma) on the whole disk"};
  }
  if (q == "gamma-prime") {
    input["alpha"] = o.alpha;
    const GammaThresholds t = gamma_thresholds(o.alpha);
    return {{{"gamma_prime", num(t.gamma_prime)},
             {"gamma0", num(t.gamma0)},
             {"g_star", num(t.g_star)}},
            "unique zero of g(alpha, .) between gamma0 and pi/2"};
  }

  const PsiParams p = make_params(o);
  input.update(params_json(p));
  if (q == "psi" || q == "extremal" || q == "convexity") {
    const Complex z = parse_complex(o.z);
    input["z"] = complex_json(z);
    if (q == "psi") {
      return {complex_json(psi_eval(p, z)),
              "psi_{A,B}(z) = log((1 + Az)/(1 + Bz))/(A - B)"};
    }
    if (q == "extremal") {
      return {complex_json(extremal_eval(p, z)),
              "extremal function z exp((Li2(-Bz) - Li2(-Az))/(A - B))"};
    }
    return {num(convexity_margin(p, z)), "convexity of psi: Re(1 + z psi''/psi')"};
  }
  if (q == "coeff") {
    input["n"] = o.n;
    return {num(psi_coeff(p, o.n)), "Taylor coefficient (A^n - B^n)/(n (A - B))"};
  }
  if (q == "axes") {
    const DomainAxes a = domain_axes(p);
    json v = {{"finite", a.finite}};
    if (p.is_symmetric()) {
      v["h1"] = num(a.h1);
      v["h2"] = num(a.h2);
    } else {
      v["k"] = num(a.k);
      v["k1"] = num(a.k1);
      v["k2"] = num(a.k2);
    }
    return {v, "semi-axes and centre of the image domain of psi"};
  }
  if (q == "disk") {
    const DiskRadii radii = disk_radii(p);
    json v = {{"inradius", num(radii.inradius)},
              {"circumradius", num(radii.circumradius)}};
    if (o.center_set && o.disk_radius_set) {
      input["a"] = o.center;
      input["r"] = o.disk_radius;
      v["contained"] = disk_in_domain(p, o.center, o.disk_radius);
    }
    return {v, "largest inscribed and smallest circumscribed disks about 1"};
  }
  if (q == "janowski") {
    input["C"] = o.c;
    input["D"] = o.d;
    const MobiusDisk disk = janowski_disk(o.c, o.d);
    return {{{"admissible", janowski_admissible(p, o.c, o.d)},
             {"disk_center", num(disk.center)},
             {"disk_radius", num(disk.radius)}},
            "admissibility of (1 + Cz)/(1 + Dz) for the class"};
  }
  if (q == "envelope") {
    input["r"] = o.r;
    const BoundEnvelope env = envelope(p, o.r);
    json v = {{"re_lo", num(env.re_lo)},
              {"re_hi", num(env.re_hi)},
              {"im_lo", num(env.im_lo)},
              {"im_hi", num(env.im_hi)}};
    if (env.conjugate) {
      v["eta"] = num(env.conjugate->eta);
      v["tau"] = num(env.conjugate->tau);
      v["T1"] = num(env.conjugate->t1);
      v["T2"] = num(env.conjugate->t2);
    }
    return {v, "bounds on Re p and Im p in |z| <= r for p subordinate to psi"};
  }
  if (q == "growth") {
    input["r"] = o.r;
    const GrowthBounds g = growth(p, o.r);
    return {{{"lower", num(g.lower)},
             {"upper", num(g.upper)},
             {"ratio_lower", num(g.ratio_lower)},
             {"ratio_upper", num(g.ratio_upper)},
             {"max_modulus", num(g.max_modulus)},
             {"deriv_lower", num(g.deriv_lower)},
             {"deriv_upper", num(g.deriv_upper)},
             {"length_lower", num(g.length_lower)},
             {"length_upper", num(g.length_upper)}},
            "growth, distortion and length bounds through f_{A,B}"};
  }
  if (q == "covering") {
    return {num(covering_constant(p)), "covering radius -f_{A,B}(-1)"};
  }
  if (q == "argbound") {
    input["r"] = o.r;
    return {num(arg_bound(p, o.r)), "bound on |arg(z f'(z)/f(z))| in |z| < r"};
  }
  if (q == "alpha0-bs" || q == "alpha0-cs") {
    const bool booth = q == "alpha0-bs";
    const Alpha0Result a = booth ? alpha0_bs(p) : alpha0_cs(p);
    return {{{"alpha0", num(a.value)},
             {"found", a.found},
             {"residual", num(a.residual)},
             {"iterations", a.iterations}},
            booth ? "switch between r0 and r1 for the Booth lemniscate class"
                  : "switch between r0 and r1 for the cissoid class"};
  }
  throw UsageError("unknown quantity " + q);
}

int cmd_eval(const Options& o, std::ostream& out) {
  json input;
  const EvalResult r = eval_quantity(o, input);
  json record;
  record["command"] = "eval " + o.target;
  record["input"] = input;
  record["value"] = r.value;
  record["paper_ref"] = r.paper_ref;
  record["defaults"] = defaults_json(o);
  emit(record, o, out);
  return kExitOk;
}

int cmd_radius(const Options& o, std::ostream& out) {
  const PsiParams p = make_params(o);
  json input = params_json(p);
  RadiusResult result;
  std::string ref;
  json oracle_value = nullptr;
  const std::string& kind = o.target;
  if (kind == "starlike" || kind == "univalence") {
    const double delta = kind == "starlike" ? o.delta : 0.0;
    if (kind == "starlike") input["delta"] = delta;
    result = starlike_radius(p, delta);
    ref = kind == "starlike" ? "radius of starlikeness of order delta"
                             : "radius of univalence (starlike of order 0)";
    if (result.branch != RadiusBranch::WholeDisk) {
      oracle_value = num(verify::sampled_starlike_root(p, delta, o.tol));
    }
  } else if (kind == "ss") {
    input["beta"] = o.beta;
    result = ss_radius(p, o.beta);
    ref = "radius of strong starlikeness of order beta";
  } else {
    const bool booth = kind == "bs";
    const double a = o.alpha_class_set ? o.alpha_class : p.alpha();
    input["alpha_class"] = a;
    if (o.alpha_class_set) {
      result = booth ? bs_radius(a, p) : cs_radius(a, p);
    } else {
      result = booth ? bs_radius(p) : cs_radius(p);
    }
    ref = booth ? "radius for the Booth lemniscate class z/(1 - a z^2)"
                : "radius for the cissoid class z/((1 - z)(1 + a z))";
    const oracle::RadialCurve curve = [booth, a](double r, double t) {
      const Complex z = std::polar(r, t);
      return booth ? booth_curve(a, z) : cissoid_curve(a, z);
    };
    oracle_value =
        num(oracle::containment_radius(curve, image_domain(p, 0.0, o.samples), o.tol));
  }
  json record;
  record["command"] = "radius " + kind;
  record["input"] = input;
  record["result"] = radius_json(result);
  record["oracle_value"] = oracle_value;
  record["paper_ref"] = ref;
  record["defaults"] = defaults_json(o);
  emit(record, o, out);
  return kExitOk;
}

std::string csv_line(double a, double b, double c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", a, b, c);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

std::string curve_csv(int samples, const std::function<Complex(double)>& f) {
  std::string text = "theta,re,im\n";
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * kPi * j / samples;
    const Complex w = f(theta);
    text += csv_line(theta, w.real(), w.imag());
  }
  return text;
}

int cmd_figure(const Options& o, std::ostream& out) {
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  json record;
  record["command"] = "figure " + o.target;
  std::vector<std::string> files;

  if (o.target == "fig1") {
    const PsiParams p = PsiParams::conjugate_pair(0.5, kPi / 3.0);
    const double outer = extremal_eval(p, 1.0).real();
    const double inner = -extremal_eval(p, -1.0).real();
    double min_mod = INFINITY;
    double max_mod = 0.0;
    const std::string curve = curve_csv(o.samples, [&](double t) {
      const Complex w = extremal_eval(p, std::polar(1.0, t));
      min_mod = std::min(min_mod, std::abs(w));
      max_mod = std::max(max_mod, std::abs(w));
      return w;
    });
    write_text(dir / "fig1_extremal.csv", curve);
    write_text(dir / "fig1_outer_circle.csv",
               curve_csv(o.samples, [&](double t) { return std::polar(outer, t); }));
    write_text(dir / "fig1_inner_circle.csv",
               curve_csv(o.samples, [&](double t) { return std::polar(inner, t); }));
    files = {"fig1_extremal.csv", "fig1_outer_circle.csv", "fig1_inner_circle.csv"};
    record["input"] = params_json(p);
    record["outer_radius"] = num(outer);
    record["inner_radius"] = num(inner);
    record["curve_min_modulus"] = num(min_mod);
    record["curve_max_modulus"] = num(max_mod);
    record["sandwiched"] = min_mod >= inner - 1e-12 && max_mod <= outer + 1e-12;
    record["paper_ref"] = "image of the unit circle under f_{A,B} between the growth circles";
  } else if (o.target == "fig2") {
    if (o.grid < 2) throw UsageError("--grid must be >= 2");
    std::string text = "alpha,gamma,g\n";
    double g_max = -INFINITY;
    for (int i = 1; i <= o.grid; ++i) {
      const double a = static_cast<double>(i) / (o.grid + 1);
      for (int j = 1; j <= o.grid; ++j) {
        const double g = kPi / 2.0 * j / (o.grid + 1);
        const double v = g_func(a, g);
        g_max = std::max(g_max, v);
        text += csv_line(a, g, v);
      }
    }
    write_text(dir / "fig2_g_surface.csv", text);
    files = {"fig2_g_surface.csv"};
    record["input"] = {{"grid", o.grid}};
    record["rows"] = o.grid * o.grid;
    record["g_max"] = num(g_max);
    record["boundary_supremum"] = 1.0 - kPi / 4.0;
    record["paper_ref"] = "g(alpha, gamma) on (0,1) x (0,pi/2)";
  } else {
    const bool booth = o.target == "fig3a";
    const PsiParams p = make_params(o);
    if (!p.is_symmetric()) throw UsageError("fig3a/fig3b use symmetric mode");
    const RadiusResult radius = booth ? bs_radius(p) : cs_radius(p);
    const double a = p.alpha();
    const oracle::RadialCurve curve = [booth, a](double r, double t) {
      const Complex z = std::polar(r, t);
      return booth ? booth_curve(a, z) : cissoid_curve(a, z);
    };
    const std::string stem = o.target;
    write_text(dir / (stem + "_domain.csv"), curve_csv(o.samples, [&](double t) {
                 return psi_eval(p, std::polar(1.0, t));
               }));
    write_text(dir / (stem + "_curve.csv"), curve_csv(o.samples, [&](double t) {
                 return curve(radius.value, t);
               }));
    files = {stem + "_domain.csv", stem + "_curve.csv"};
    const ImageDomain d = image_domain(p, 0.0, o.samples);
    const double margin = oracle::curve_margin(curve, d, radius.value, o.samples);
    record["input"] = params_json(p);
    record["radius"] = radius_json(radius);
    record["curve_margin"] = num(margin);
    record["contained"] = margin >= -1e-8;
    record["paper_ref"] = booth
        ? "Booth lemniscate curve at its sharp radius inside psi(dD)"
        : "cissoid curve at its sharp radius inside psi(dD)";
  }
  record["files"] = files;
  record["out_dir"] = o.out_dir;
  record["defaults"] = defaults_json(o);
  std::ostringstream text;
  text << record.dump(2) << "\n";
  out << text.str();
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<verify::CheckResult> checks;
  if (o.target == "all") {
    checks = verify::acceptance_checks(o.tol);
  } else if (o.target == "radii") {
    checks = verify::radii_checks(o.alpha, o.tol);
  } else {
    const verify::EllipseMeasurement m = verify::measure_ellipse(o.alpha);
    out << "alpha " << m.alpha << "\n";
    char line[256];
    std::snprintf(line, sizeof line,
                  "max radial distance from ellipse %.6g at theta %.6g\n"
                  "max |1 - level| %.6g\n"
                  "%d of %d grid points get opposite verdicts with "
                  "|margin| > %.3g\n",
                  m.max_distance, m.worst_theta, m.max_level, m.disagreements,
                  m.points, m.threshold);
    out << line;
    if (o.report) return kExitOk;
    checks.push_back({1, "ellipse verdicts", m.disagreements == 0,
                      std::to_string(m.disagreements) + " disagreements"});
  }
  int passed = 0;
  for (const auto& c : checks) {
    out << verify::format(c) << "\n";
    passed += c.pass ? 1 : 0;
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return passed == static_cast<int>(checks.size()) ? kExitOk : kExitFailure;
}

double env_tolerance() {
  const char* text = std::getenv("PSIAB_TOL");
  if (text == nullptr || *text == '\0') return kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(tol > 0.0)) {
    throw UsageError("PSIAB_TOL must be a positive number");
  }
  return tol;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "sym or conj")
      ->check(CLI::IsMember({"sym", "symmetric", "conj", "conjugate"}))
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "alpha in (0, 1]")->capture_default_str();
  cmd->add_option_function<double>(
      "--gamma",
      [&o](double g) {
        o.gamma = g;
        o.gamma_set = true;
      },
      "gamma in (0, pi/2], conjugate mode");
}

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--samples", o.samples, "boundary samples")
      ->check(CLI::Range(64, 1 << 24))
      ->capture_default_str();
  cmd->add_option_function<double>(
      "--tol",
      [&o](double t) {
        o.tol = t;
        o.tol_set = true;
      },
      "oracle tolerance (overrides PSIAB_TOL)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Numerical toolkit for psi_{A,B} and the class F[A,B]", "psiab"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
  eval->add_option("quantity", o.target)
      ->required()
      ->check(CLI::IsMember({"psi", "coeff", "dilog", "extremal", "convexity",
                             "axes", "disk", "janowski", "envelope", "growth",
                             "covering", "argbound", "g", "gamma0",
                             "gamma-prime", "alpha0-bs", "alpha0-cs"}));
  add_params(eval, o);
  add_run_options(eval, o);
  eval->add_option("--z", o.z, "complex point 're,im'");
  eval->add_option("--n", o.n, "coefficient index");
  eval->add_option("--r", o.r, "radius");
  eval->add_option("--C", o.c, "Janowski C");
  eval->add_option("--D", o.d, "Janowski D");
  eval->add_option_function<double>(
      "--a", [&o](double a) { o.center = a, o.center_set = true; },
      "disk centre for the disk criterion");
  eval->add_option_function<double>(
      "--disk-r", [&o](double r) { o.disk_radius = r, o.disk_radius_set = true; },
      "disk radius for the disk criterion");
  eval->add_option("--out", o.out_path, "write the JSON record to a file");

  auto* radius = app.add_subcommand("radius", "Compute a radius");
  radius->add_option("kind", o.target)
      ->required()
      ->check(CLI::IsMember({"starlike", "univalence", "ss", "bs", "cs"}));
  add_params(radius, o);
  add_run_options(radius, o);
  radius->add_option("--delta", o.delta, "order of starlikeness");
  radius->add_option("--beta", o.beta, "order of strong starlikeness");
  radius->add_option_function<double>(
      "--alpha-class",
      [&o](double a) { o.alpha_class = a, o.alpha_class_set = true; },
      "class parameter, decoupled from alpha");
  radius->add_option("--out", o.out_path, "write the JSON record to a file");

  auto* figure = app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("id", o.target)
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3a", "fig3b"}));
  add_params(figure, o);
  add_run_options(figure, o);
  figure->add_option("--grid", o.grid, "grid size for fig2")->capture_default_str();
  figure->add_option("--out-dir", o.out_dir, "output directory")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", o.target)
      ->required()
      ->check(CLI::IsMember({"all", "radii", "ellipse"}));
  add_params(verify_cmd, o);
  add_run_options(verify_cmd, o);
  verify_cmd->add_flag("--report", o.report, "ellipse: report only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!o.tol_set) o.tol = env_tolerance();
    if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
    if (*eval) return cmd_eval(o, out);
    if (*radius) return cmd_radius(o, out);
    if (*figure) return cmd_figure(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace psiab
