#include "cauchylab/cauchy.hpp"
#include "cauchylab/specfun.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cauchylab;
using std::numbers::pi;

namespace {

std::complex<double> one(Point) { return 1.0; }

ComplexField as_field(const EigenPair& pair) {
  return [&pair](Point z) { return std::complex<double>(pair.u(z)); };
}

}  // namespace

TEST_CASE("cauchy_radial: closed forms") {
  auto unit = [](double) { return 1.0; };
  for (const Point z : {Point(0.3, 0.4), Point(-0.9, 0.1), Point(0.0, -0.2)}) {
    CHECK(std::abs(cauchy_radial(unit, 0.0, 1.0, z) - std::conj(z)) < 1e-14);
  }
  CHECK(std::abs(cauchy_radial(unit, 0.5, 1.0, 0.75) - (0.75 * 0.75 - 0.25) / 0.75) < 1e-14);
  CHECK(cauchy_radial(unit, 0.0, 1.0, 0.0) == std::complex<double>(0.0));
  CHECK_THROWS_AS(cauchy_radial(unit, 0.0, 1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(cauchy_radial(unit, 0.5, 1.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(cauchy_radial(unit, 0.5, 1.0, 0.0), std::domain_error);
}

TEST_CASE("cauchy_general: constant density on the disk") {
  const Point z(0.3, 0.4);
  CHECK(std::abs(cauchy_general(DomainSpec::disk(), one, z) - std::conj(z)) < 1e-10);
}

TEST_CASE("cauchy_general agrees with cauchy_radial on radial data") {
  for (const DomainSpec& d : {DomainSpec::disk(), DomainSpec::annulus(0.5, 1.0)}) {
    const EigenPair pair = ground_state(d);
    auto profile = [&pair](double rho) { return pair.profile(rho); };
    for (const Point z : d.interior_samples(20)) {
      const std::complex<double> general = cauchy_general(d, as_field(pair), z);
      const std::complex<double> radial = cauchy_radial(profile, d.r_inner(), d.r_outer(), z);
      CHECK(std::abs(general - radial) < 1e-8);
    }
  }
}

TEST_CASE("cauchy_general: disk ground state equals v0") {
  const EigenPair pair = ground_state(DomainSpec::disk());
  for (const Point z : DomainSpec::disk().interior_samples(10)) {
    CHECK(std::abs(cauchy_general(DomainSpec::disk(), as_field(pair), z) - v0_field(pair, z)) < 1e-10);
  }
}

TEST_CASE("cauchy_general: square corner value against a Cartesian oracle") {
  const DomainSpec sq = DomainSpec::unit_square();
  const EigenPair pair = ground_state(sq);
  const std::complex<double> w = cauchy_general(sq, as_field(pair), 0.0);
  // (1/pi) int u / (0 - w) = -(1/pi) int u (x - i y) / (x^2 + y^2)
  const double re = -oracle::integrate_2d(
                        [](double x, double y) {
                          return x * std::sin(pi * x) * std::sin(pi * y) / (x * x + y * y);
                        },
                        0.0, 1.0, 0.0, 1.0) /
                    pi;
  const double im = oracle::integrate_2d(
                        [](double x, double y) {
                          return y * std::sin(pi * x) * std::sin(pi * y) / (x * x + y * y);
                        },
                        0.0, 1.0, 0.0, 1.0) /
                    pi;
  CHECK(w.real() < 0.0);
  CHECK(std::abs(w.real() - re) < 1e-6);
  CHECK(std::abs(w.imag() - im) < 1e-6);
  // h(0) = C u(0) - v0(0) is non-zero because v0(0) = 0.
  CHECK(v0_field(pair, 0.0) == std::complex<double>(0.0));
  CHECK(std::abs(w - v0_field(pair, 0.0)) > 0.1);
}

TEST_CASE("cauchy_general solves d-bar F = f") {
  const ComplexField f = [](Point w) { return std::complex<double>(std::exp(w.real()), 0.5 * w.imag() * w.imag()); };
  for (const DomainSpec& d : {DomainSpec::unit_square(), DomainSpec::annulus(0.5, 1.0), DomainSpec::disk()}) {
    const double h = 1e-4 * d.diameter();
    int checked = 0;
    for (const Point z : d.interior_samples(60)) {
      if (d.distance_to_boundary(z) < 10.0 * h || checked == 20) continue;
      ++checked;
      const auto F = [&](Point p) { return cauchy_general(d, f, p, 1e-13); };
      const std::complex<double> dbar =
          0.5 * ((F(z + h) - F(z - h)) + std::complex<double>(0, 1) * (F(z + Point(0, h)) - F(z - Point(0, h)))) / (2.0 * h);
      CHECK(std::abs(dbar - f(z)) <= 1e-4 * std::abs(f(z)));
    }
    CHECK(checked == 20);
  }
}

TEST_CASE("cauchy_general rejects points outside the closure") {
  CHECK_THROWS_AS(cauchy_general(DomainSpec::disk(), one, 1.5), std::domain_error);
  CHECK_THROWS_AS(cauchy_general(DomainSpec::annulus(0.5, 1.0), one, 0.1), std::domain_error);
}

TEST_CASE("holomorphic_remainder") {
  const EigenPair disk = ground_state(DomainSpec::disk());
  for (const Point z : DomainSpec::disk().interior_samples(10)) {
    CHECK(std::abs(holomorphic_remainder(DomainSpec::disk(), disk, z)) < 1e-12);
  }
  const DomainSpec a = DomainSpec::annulus(0.5, 1.0);
  const EigenPair ann = ground_state(a);
  const double c = 2.0 * 0.5 * ann.profile_derivative(0.5) / ann.lambda1();
  CHECK(std::abs(holomorphic_remainder(a, ann, 0.75) - c / 0.75) < 1e-12);
  CHECK_THROWS_AS(holomorphic_remainder(a, ann, 0.5), std::domain_error);
}

TEST_CASE("eigentest: disk ratio is the threshold and h vanishes") {
  const EigentestReport r = eigentest(DomainSpec::disk(), 2);
  CHECK(std::abs(r.ratio - 2.0 / bessel_j0_first_zero()) < 1e-4);
  CHECK(r.h_norm_sq / r.w_norm_sq < 1e-8);
  CHECK(r.ratio >= r.threshold - 1e-10);
}

TEST_CASE("eigentest: square has a strictly positive margin") {
  const EigentestReport r = eigentest(DomainSpec::unit_square(), 1);
  CHECK(r.threshold == doctest::Approx(std::sqrt(2.0) / pi).epsilon(1e-14));
  CHECK(r.ratio > std::sqrt(2.0) / pi);
  CHECK(r.margin > 0.0);
  CHECK(r.pythagoras_residual < r.residual_tolerance);
  CHECK(r.orthogonality_residual < r.residual_tolerance);
  CHECK(r.v0_threshold_residual < r.residual_tolerance);
}

TEST_CASE("eigentest and annulus_identity on A(0.5, 1)") {
  const EigentestReport r = eigentest(DomainSpec::annulus(0.5, 1.0), 3);
  CHECK(r.residual_tolerance == 1e-6);
  CHECK(r.pythagoras_residual < 1e-6);
  CHECK(r.orthogonality_residual < 1e-6);
  CHECK(r.margin > 0.0);

  const AnnulusIdentityReport a = annulus_identity(0.5, 1.0, 3);
  CHECK(a.pointwise_samples == 20);
  CHECK(a.max_pointwise_error < 1e-8);
  CHECK(a.v0_inv_z_product < 1e-10);
  CHECK(std::abs(a.inv_z_norm_sq - 2.0 * pi * std::log(2.0)) < 1e-10);
  CHECK(a.gap_relative_error < 1e-5);
  CHECK(std::abs(r.ratio * r.ratio - r.threshold * r.threshold - a.gap_predicted) <= 1e-5 * a.gap_predicted);
}

TEST_CASE("multipole_moments: symmetric cases") {
  const MultipoleExpansion d = multipole_moments(DomainSpec::disk(), one, 4);
  CHECK(std::abs(d.moments()[0] - pi) < 1e-12);
  CHECK(std::abs(d.moments()[1]) < 1e-12);
  const EigenPair disk = ground_state(DomainSpec::disk());
  const MultipoleExpansion u = multipole_moments(DomainSpec::disk(), as_field(disk), 4);
  CHECK(std::abs(u.moments()[1]) < 1e-10);
  CHECK(std::abs(u.moments()[2]) < 1e-10);
  const EigenPair sq = ground_state(DomainSpec::unit_square());
  const MultipoleExpansion s = multipole_moments(DomainSpec::unit_square(), as_field(sq), 8);
  CHECK(std::abs(s.moments()[0] - 4.0 / (pi * pi)) < 1e-12);
  CHECK(s.order() == 8);
  CHECK(s.pi_factor == doctest::Approx(1.0 / pi).epsilon(1e-16));
  CHECK_THROWS_AS(multipole_moments(DomainSpec::disk(), one, 13), std::invalid_argument);
  CHECK_THROWS_AS(multipole_moments(DomainSpec::disk(), one, -1), std::invalid_argument);
}

TEST_CASE("exterior_cauchy: Laurent agreement and decay") {
  const Point z = std::polar(10.0, 0.7);
  CHECK(std::abs(exterior_cauchy(DomainSpec::disk(), one, z) - 1.0 / z) < 20.0 / std::pow(std::abs(z), 3));

  const DomainSpec sq = DomainSpec::unit_square();
  const EigenPair pair = ground_state(sq);
  const MultipoleExpansion m = multipole_moments(sq, as_field(pair), 8);
  for (const double angle : {0.0, 1.0, 2.5, 4.0}) {
    const Point p = std::polar(10.0, angle);
    const double mismatch = std::abs(exterior_cauchy(sq, as_field(pair), p) - m.evaluate(p));
    CHECK(mismatch < 1e-10);
    CHECK(mismatch <= m.tail_bound(p));
  }
  CHECK(m.tail_bound(0.5) == std::numeric_limits<double>::infinity());

  // u conj(w)^2 has M0 = M1 = 0 on the disk, so the transform decays like z^-3.
  const EigenPair disk = ground_state(DomainSpec::disk());
  const ComplexField f = [&](Point w) { return std::conj(w) * std::conj(w) * disk.u(w); };
  const double near = std::abs(exterior_cauchy(DomainSpec::disk(), f, std::polar(10.0, 0.3)));
  const double far = std::abs(exterior_cauchy(DomainSpec::disk(), f, std::polar(100.0, 0.3)));
  CHECK(std::abs(std::log10(far / near) + 3.0) < 0.1);

  CHECK_THROWS_AS(exterior_cauchy(sq, one, {0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(exterior_cauchy(sq, one, 1.0), std::domain_error);
}
