// One pass/fail line per acceptance criterion.  Exit status 1 if any fails.

#include "cauchylab/cauchy.hpp"
#include "cauchylab/experiment.hpp"
#include "cauchylab/fourier.hpp"
#include "cauchylab/potential.hpp"
#include "cauchylab/specfun.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace cauchylab;
using std::numbers::pi;

namespace {

constexpr double kJ01 = 2.4048255577;

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(const std::string& label, bool ok, double value) {
    std::ostringstream s;
    s.precision(10);
    s << label << " " << value << (ok ? " ok" : " FAIL");
    parts_.push_back(s.str());
    pass_ = pass_ && ok;
  }

  bool print(int number) const {
    std::printf("criterion %d: %s  %s:", number, pass_ ? "PASS" : "FAIL", title_.c_str());
    for (std::size_t k = 0; k < parts_.size(); ++k) std::printf("%s %s", k ? ";" : "", parts_[k].c_str());
    std::printf("\n");
    std::fflush(stdout);
    return pass_;
  }

 private:
  std::string title_;
  std::vector<std::string> parts_;
  bool pass_ = true;
};

ComplexField field_of(const EigenPair& pair) {
  return [&pair](Point z) { return std::complex<double>(pair.u(z)); };
}

Criterion counterexample_values() {
  Criterion c("counterexample on the unit disk");
  const CounterexampleReport r = counterexample();
  c.check("|lhs - 8/3|", std::abs(r.lhs - 8.0 / 3.0) <= 1e-5, std::abs(r.lhs - 8.0 / 3.0));
  c.check("|rhs - pi/j01|", std::abs(r.rhs - pi / kJ01) <= 1e-9, std::abs(r.rhs - pi / kJ01));
  c.check("lhs - rhs", r.verdict && r.lhs > r.rhs, r.lhs - r.rhs);
  return c;
}

Criterion bessel_integral() {
  Criterion c("int J1^2/r^2 = 4/(3 pi)");
  const double v = bessel_j1_squared_over_r2().value;
  c.check("error", std::abs(v - 4.0 / (3.0 * pi)) <= 1e-6, std::abs(v - 4.0 / (3.0 * pi)));
  return c;
}

Criterion sharp_constant_disk() {
  Criterion c("sharp constant of the unit disk");
  const SharpConstantReport r = sharp_constant(DomainSpec::disk(), 3);
  const double radial = *r.radial_value;
  c.check("radial value (target 0.852 +- 5e-3)", std::abs(radial - 0.852) <= 5e-3, radial);
  c.check("|nystrom - radial|", std::abs(r.extrapolated - radial) <= 5e-3, std::abs(r.extrapolated - radial));
  const bool sandwich = 8.0 / (3.0 * pi) <= radial && radial <= 1.0 && r.lower_bound <= r.extrapolated &&
                        r.extrapolated <= r.schur_upper;
  c.check("sandwich 8/(3pi) <= value <= 1, value", sandwich, radial);
  return c;
}

Criterion quadratic_form_identity() {
  Criterion c("Fourier side = S_D side of the quadratic form");
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 3, {6, 12}));
  const double sd1 = sd_quadratic_form(m, [](Point) { return 1.0; }) / (2.0 * pi);
  const double f1 = weighted_form_radial(RadialProfile::indicator(1.0)).value;
  c.check("f=1 rel. diff", std::abs(sd1 - f1) <= 2e-3 * f1, std::abs(sd1 - f1) / f1);
  const double sd2 = sd_quadratic_form(m, [](Point z) { return 1.0 - std::norm(z); }) / (2.0 * pi);
  const double f2 = weighted_form_radial({[](double r) { return 1.0 - r * r; }, 1.0, 0.0}).value;
  c.check("f=1-rho^2 rel. diff", std::abs(sd2 - f2) <= 2e-3 * f2, std::abs(sd2 - f2) / f2);
  return c;
}

Criterion disk_eigentest() {
  Criterion c("disk eigentest at level 4");
  const EigentestReport r = eigentest(DomainSpec::disk(), 4);
  c.check("|ratio - 2/j01|", std::abs(r.ratio - 2.0 / kJ01) <= 1e-4, std::abs(r.ratio - 2.0 / kJ01));
  c.check("||h||^2/||w||^2", r.h_norm_sq / r.w_norm_sq < 1e-8, r.h_norm_sq / r.w_norm_sq);
  return c;
}

Criterion square_eigentest() {
  Criterion c("square eigentest at level 3");
  const DomainSpec sq = DomainSpec::unit_square();
  const EigentestReport r = eigentest(sq, 3);
  c.check("margin over sqrt(2)/pi", r.ratio > std::sqrt(2.0) / pi && r.margin > 0.0, r.margin);
  const EigenPair pair = ground_state(sq);
  c.check("|v0(0)|", v0_field(pair, 0.0) == std::complex<double>(0.0), std::abs(v0_field(pair, 0.0)));
  const double re = cauchy_general(sq, field_of(pair), 0.0).real();
  const double oracle_re =
      -oracle::integrate_2d(
          [](double x, double y) { return x * std::sin(pi * x) * std::sin(pi * y) / (x * x + y * y); }, 0.0, 1.0,
          0.0, 1.0) /
      pi;
  c.check("Re C_D u(0)", re < 0.0, re);
  c.check("|Re C_D u(0) - oracle|", std::abs(re - oracle_re) <= 1e-6, std::abs(re - oracle_re));
  c.check("pythagoras residual", r.pythagoras_residual < 1e-6, r.pythagoras_residual);
  c.check("orthogonality residual", r.orthogonality_residual < 1e-6, r.orthogonality_residual);
  return c;
}

Criterion annulus_decomposition() {
  Criterion c("annulus A(0.5, 1) decomposition");
  const AnnulusIdentityReport a = annulus_identity(0.5, 1.0, 3);
  c.check("pointwise error (20 pts)", a.pointwise_samples == 20 && a.max_pointwise_error <= 1e-8, a.max_pointwise_error);
  c.check("|<v0, 1/z>|", a.v0_inv_z_product < 1e-10, a.v0_inv_z_product);
  const double norm_err = std::abs(a.inv_z_norm_sq - 2.0 * pi * std::log(2.0));
  c.check("| ||1/z||^2 - 2 pi log 2 |", norm_err <= 1e-10, norm_err);
  c.check("gap relative error", a.gap_relative_error <= 1e-5, a.gap_relative_error);
  return c;
}

Criterion exterior_decay() {
  Criterion c("exterior decay");
  const DomainSpec sq = DomainSpec::unit_square();
  const EigenPair pair = ground_state(sq);
  const MultipoleExpansion m = multipole_moments(sq, field_of(pair), 8);
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const Point z = std::polar(10.0, 2.0 * pi * k / 8.0 + 0.1);
    worst = std::max(worst, std::abs(exterior_cauchy(sq, field_of(pair), z) - m.evaluate(z)));
  }
  c.check("max |exterior - K=8 series| at |z|=10", worst < 1e-10, worst);
  const ComplexField generic = [](Point w) { return std::complex<double>(std::exp(w.real()), w.imag() * w.imag()); };
  for (const DomainSpec& d : {sq, DomainSpec::disk(), DomainSpec::annulus(0.5, 1.0)}) {
    const Point dir = std::polar(1.0, 0.4);
    const double slope = std::log10(std::abs(exterior_cauchy(d, generic, 100.0 * dir)) /
                                    std::abs(exterior_cauchy(d, generic, 10.0 * dir)));
    c.check("slope on " + d.name(), std::abs(slope + 1.0) <= 0.1, slope);
  }
  return c;
}

Criterion invariant_suites() {
  Criterion c("module invariants");
  double wronskian = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / 40.0);
    const double w = bessel_j(1, x) * bessel_y(0, x) - bessel_j(0, x) * bessel_y(1, x);
    wronskian = std::max(wronskian, std::abs(w - 2.0 / (pi * x)));
  }
  c.check("Wronskian", wronskian < 1e-10, wronskian);

  double k_err = 0.0;
  for (int i = 1; i <= 9; ++i) k_err = std::max(k_err, std::abs(elliptic_k(0.1 * i) - oracle::elliptic_k_integral(0.1 * i)));
  c.check("elliptic K vs quadrature", k_err < 1e-12, k_err);

  double threshold = 0.0;
  double dbar = 0.0;
  for (const DomainSpec& d : {DomainSpec::disk(), DomainSpec::unit_square(), DomainSpec::annulus(0.5, 1.0)}) {
    const EigenPair pair = ground_state(d);
    const QuadratureMesh mesh = build_mesh(d, 3);
    const double ratio = l2_norm(mesh, [&](Point z) { return v0_field(pair, z); }) / l2_norm(mesh, field_of(pair));
    const double expected = 2.0 / std::sqrt(pair.lambda1());
    threshold = std::max(threshold, std::abs(ratio - expected) / expected);
    const double h = 1e-4 * d.diameter();
    for (const Point z : d.interior_samples(20)) {
      if (d.distance_to_boundary(z) < 4.0 * h) continue;
      const std::complex<double> vx = (v0_field(pair, z + h) - v0_field(pair, z - h)) / (2.0 * h);
      const std::complex<double> vy = (v0_field(pair, z + Point(0, h)) - v0_field(pair, z - Point(0, h))) / (2.0 * h);
      const std::complex<double> d_bar = 0.5 * (vx + std::complex<double>(0, 1) * vy);
      dbar = std::max(dbar, std::abs(d_bar - pair.u(z)) / (std::abs(pair.u(z)) + 1e-3));
    }
  }
  c.check("||v0||/||u|| vs 2/sqrt(lambda1)", threshold < 1e-6, threshold);
  c.check("dbar v0 = u", dbar < 1e-5, dbar);

  const DomainSpec ann = DomainSpec::annulus(0.5, 1.0);
  const ComplexField f = [](Point w) { return std::complex<double>(std::exp(w.real()), w.imag()); };
  double cauchy_dbar = 0.0;
  for (const Point z : ann.interior_samples(10)) {
    const double h = 1e-4;
    if (ann.distance_to_boundary(z) < 10.0 * h) continue;
    auto F = [&](Point p) { return cauchy_general(ann, f, p, 1e-13); };
    const std::complex<double> d_bar =
        0.5 * ((F(z + h) - F(z - h)) + std::complex<double>(0, 1) * (F(z + Point(0, h)) - F(z - Point(0, h)))) / (2.0 * h);
    cauchy_dbar = std::max(cauchy_dbar, std::abs(d_bar - f(z)) / std::abs(f(z)));
  }
  c.check("dbar C_D f = f", cauchy_dbar < 1e-4, cauchy_dbar);

  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 2, {6, 12}));
  const SpectralEstimate est = power_iteration(m.entries, 1e-12);
  const bool perron = (est.vector.array() > 0.0).all() || (est.vector.array() < 0.0).all();
  c.check("Perron vector of one sign", perron, est.vector.minCoeff());
  const double asym = (m.entries - m.entries.transpose()).cwiseAbs().maxCoeff();
  c.check("S_D symmetry", asym == 0.0, asym);

  ExperimentConfig config;
  config.experiment = Experiment::counterexample;
  const bool deterministic = render(run(config), OutputFormat::json) == render(run(config), OutputFormat::json);
  c.check("identical json for identical runs", deterministic, deterministic ? 1.0 : 0.0);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Criterion()>> criteria = {
      counterexample_values, bessel_integral,      sharp_constant_disk, quadratic_form_identity, disk_eigentest,
      square_eigentest,      annulus_decomposition, exterior_decay,      invariant_suites,
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      if (!criteria[k]().print(static_cast<int>(k + 1))) ++failures;
    } catch (const std::exception& e) {
      std::printf("criterion %zu: FAIL  error: %s\n", k + 1, e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
