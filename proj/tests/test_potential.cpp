#include "cauchylab/fourier.hpp"
#include "cauchylab/potential.hpp"
#include "cauchylab/specfun.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

using namespace cauchylab;
using std::numbers::pi;

namespace {

const MeshResolution kSdResolution{6, 12};

QuadratureMesh two_node_mesh() {
  QuadratureMesh mesh;
  mesh.nodes.resize(2);
  mesh.weights.resize(2);
  mesh.nodes << Point(0.1, 0.0), Point(-0.2, 0.4);
  mesh.weights << 0.2, 0.3;
  mesh.domain = DomainSpec::disk();
  return mesh;
}

}  // namespace

TEST_CASE("assemble_sd: two-node matrix") {
  for (const DiagonalRule rule : {DiagonalRule::row_integral_subtraction, DiagonalRule::equal_area_disk}) {
    const SdMatrix m = assemble_sd(two_node_mesh(), rule);
    REQUIRE(m.entries.rows() == 2);
    const double expected = std::sqrt(0.2 * 0.3) / std::abs(Point(0.3, -0.4));
    CHECK(m.entries(0, 1) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(m.entries(1, 0) == m.entries(0, 1));
    CHECK(m.diagonal_rule == rule);
  }
  const SdMatrix e = assemble_sd(two_node_mesh(), DiagonalRule::equal_area_disk);
  CHECK(e.entries(0, 0) == doctest::Approx(2.0 * std::sqrt(pi * 0.2)));
}

TEST_CASE("assemble_sd: exact symmetry, positivity and row sums") {
  for (const DomainSpec& d : {DomainSpec::disk(), DomainSpec::annulus(0.5, 1.0), DomainSpec::unit_square()}) {
    const SdMatrix m = assemble_sd(build_mesh(d, 1, kSdResolution));
    CHECK((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXd off = m.entries;
    off.diagonal().setOnes();
    CHECK(off.minCoeff() > 0.0);
    CHECK(m.row_sums.minCoeff() > 0.0);
    const SdMatrix e = assemble_sd(build_mesh(d, 1, kSdResolution), DiagonalRule::equal_area_disk);
    CHECK(e.entries.minCoeff() > 0.0);
  }
  for (const DiagonalRule rule : {DiagonalRule::row_integral_subtraction, DiagonalRule::equal_area_disk}) {
    const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 3, kSdResolution), rule);
    CHECK(m.row_sums.maxCoeff() <= 2.0 * pi * 1.05);
  }
}

TEST_CASE("assemble_sd: node guard") {
  CHECK_THROWS_AS(assemble_sd(build_mesh(DomainSpec::disk(), 3)), std::length_error);
}

TEST_CASE("unit_potential: closed forms on the disk") {
  CHECK(unit_potential(DomainSpec::disk(), 0.0) == doctest::Approx(2.0 * pi).epsilon(1e-12));
  // On the unit circle the potential of the disk is 4.
  CHECK(unit_potential(DomainSpec::disk(), 1.0) == doctest::Approx(4.0).epsilon(1e-11));
  // Inside: 4 E(|x|^2), checked against quadrature of the angular form.
  const double r = 0.6;
  const double e = oracle::integrate([r](double t) { return std::sqrt(1.0 - r * r * std::sin(t) * std::sin(t)); }, 0.0, pi / 2.0);
  CHECK(unit_potential(DomainSpec::disk(), r) == doctest::Approx(4.0 * e).epsilon(1e-11));
}

TEST_CASE("<S_D 1, 1> / (2 pi) tends to 8/3 on the unit disk") {
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 2, kSdResolution));
  const double form = sd_quadratic_form(m, [](Point) { return 1.0; }) / (2.0 * pi);
  CHECK(std::abs(form - 8.0 / 3.0) < 1e-5);
}

TEST_CASE("power_iteration and lambda_max: small matrices") {
  Eigen::MatrixXd one(1, 1);
  one << 3.5;
  CHECK(power_iteration(one, 1e-14).value == doctest::Approx(3.5));
  Eigen::Matrix2d a;
  a << 2, 1, 1, 2;
  CHECK(std::abs(power_iteration(a, 1e-14).value - 3.0) < 1e-12);
  Eigen::Matrix2d slow;
  slow << 1.0, 0.0, 0.0, 0.999;
  CHECK_THROWS_AS(power_iteration(slow, 1e-15, 3), std::runtime_error);
  CHECK_THROWS_AS(power_iteration(a, 0.0), std::invalid_argument);
}

TEST_CASE("lambda_max matches a dense symmetric eigensolver and the Perron vector is positive") {
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 2, kSdResolution));
  const SpectralEstimate est = power_iteration(m.entries, 1e-14);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(m.entries, Eigen::EigenvaluesOnly);
  CHECK(std::abs(est.value - dense.eigenvalues().maxCoeff()) < 1e-10);
  CHECK(std::abs(lambda_max(m) - est.value) < 1e-9);
  const bool positive = (est.vector.array() > 0.0).all();
  const bool negative = (est.vector.array() < 0.0).all();
  CHECK((positive || negative));
}

TEST_CASE("lambda_max is deterministic") {
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::unit_square(), 1, kSdResolution));
  const double a = lambda_max(m);
  const double b = lambda_max(assemble_sd(build_mesh(DomainSpec::unit_square(), 1, kSdResolution)));
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("radial_kernel against angular quadrature") {
  for (const auto& [rho, sigma] : {std::pair{0.3, 0.7}, std::pair{0.5, 0.55}, std::pair{0.9, 0.1}}) {
    const double ref = oracle::integrate(
        [rho, sigma](double phi) { return 1.0 / std::sqrt(rho * rho + sigma * sigma - 2.0 * rho * sigma * std::cos(phi)); },
        0.0, 2.0 * pi);
    CHECK(std::abs(radial_kernel(rho, sigma) - ref) < 1e-10);
  }
}

TEST_CASE("radial_sd_lambda_max: convergence, scaling and the 2-D Nystrom value") {
  const double c512 = radial_sd_lambda_max(1.0, 512);
  const double c1024 = radial_sd_lambda_max(1.0, 1024);
  CHECK(std::abs(c512 - c1024) < 1e-7 * c1024);
  for (const double radius : {0.5, 2.0}) {
    CHECK(std::abs(radial_sd_lambda_max(radius) / radius - c512) < 1e-8);
  }
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 2, kSdResolution));
  CHECK(std::abs(lambda_max(m) - c512) / (2.0 * pi) < 5e-3);
  CHECK_THROWS_AS(radial_sd_lambda_max(1.0, 8), std::invalid_argument);
}

TEST_CASE("schur_bound") {
  const SchurBound disk = schur_bound(DomainSpec::disk());
  CHECK(std::abs(disk.value - 1.0) < 1e-6);
  CHECK(std::abs(disk.argmax) <= disk.grid_spacing);
  CHECK(schur_bound(DomainSpec::annulus(0.5, 1.0)).value < disk.value);
  const SchurBound sq = schur_bound(DomainSpec::unit_square());
  CHECK(std::abs(sq.argmax - Point(0.5, 0.5)) <= sq.grid_spacing);
}

TEST_CASE("sharp_constant: sandwich and monotone levels on all three domains") {
  for (const DomainSpec& d : {DomainSpec::disk(), DomainSpec::annulus(0.5, 1.0), DomainSpec::unit_square()}) {
    const SharpConstantReport r = sharp_constant(d, 3);
    REQUIRE(r.per_level.size() == 3);
    for (std::size_t k = 1; k < r.per_level.size(); ++k) {
      CHECK(r.per_level[k].c_estimate >= r.per_level[k - 1].c_estimate - 1e-4);
      CHECK(r.per_level[k].node_count == 4 * r.per_level[k - 1].node_count);
    }
    CHECK(r.lower_bound <= r.extrapolated);
    CHECK(r.extrapolated <= r.schur_upper + 1e-4);
    CHECK(r.radial_value.has_value() == (d.kind() == DomainKind::disk));
  }
  CHECK_THROWS_AS(sharp_constant(DomainSpec::disk(), 1), std::invalid_argument);
}

TEST_CASE("sharp_constant: unit disk bounds") {
  const SharpConstantReport r = sharp_constant(DomainSpec::disk(), 2);
  CHECK(std::abs(r.lower_bound - 8.0 / (3.0 * pi)) < 1e-5);
  CHECK(std::abs(r.schur_upper - 1.0) < 1e-6);
  CHECK(std::abs(r.extrapolated - *r.radial_value) < 5e-3);
  // The Rayleigh quotient of 1 already exceeds lambda1^{-1/2} = 1 / j01.
  CHECK(r.lower_bound > 1.0 / bessel_j0_first_zero());
}

TEST_CASE("equal-area diagonal rule stays within the sandwich") {
  SharpConstantOptions options;
  options.diagonal_rule = DiagonalRule::equal_area_disk;
  const SharpConstantReport r = sharp_constant(DomainSpec::disk(), 2, options);
  CHECK(r.per_level.back().c_estimate > 8.0 / (3.0 * pi));
  CHECK(r.per_level.back().c_estimate < 1.0);
}

TEST_CASE("quadratic form identity: S_D side against the Fourier side") {
  const SdMatrix m = assemble_sd(build_mesh(DomainSpec::disk(), 2, kSdResolution));
  const struct {
    RealField f;
    RadialProfile profile;
  } cases[] = {
      {[](Point) { return 1.0; }, RadialProfile::indicator(1.0)},
      {[](Point z) { return 1.0 - std::norm(z); }, RadialProfile{[](double r) { return 1.0 - r * r; }, 1.0, 0.0}},
  };
  for (const auto& c : cases) {
    const double sd = sd_quadratic_form(m, c.f) / (2.0 * pi);
    const double fourier = weighted_form_radial(c.profile).value;
    CHECK(std::abs(sd - fourier) <= 2e-3 * std::abs(fourier));
  }
}
