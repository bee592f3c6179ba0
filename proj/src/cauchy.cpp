#include "cauchylab/cauchy.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchylab {

using std::numbers::pi;

std::complex<double> cauchy_radial(const std::function<double(double)>& profile, double r_inner,
                                   double r_outer, Point z, int order) {
  const double rho = std::abs(z);
  const double slack = 1e-12 * r_outer;
  if (rho < r_inner - slack || rho > r_outer + slack) {
    throw std::domain_error("cauchy_radial: |z| outside the radial support");
  }
  if (rho == 0.0) {
    if (r_inner > 0.0) throw std::domain_error("cauchy_radial: z = 0 outside an annulus");
    return 0.0;
  }
  if (rho <= r_inner) return 0.0;
  const RadialGrid grid = build_radial_grid(r_inner, rho, order);
  double integral = 0.0;
  for (Eigen::Index k = 0; k < grid.nodes.size(); ++k) {
    integral += grid.weights(k) * profile(grid.nodes(k)) * grid.nodes(k);
  }
  return 2.0 * integral / z;
}

std::complex<double> cauchy_general(const DomainSpec& spec, const ComplexField& f, Point z,
                                    double tol) {
  // 1 / (z - w) = -e^{-i phi} / t   for w = z + t e^{i phi}
  auto weight = [](double phi) { return -std::polar(1.0 / pi, -phi); };
  return polar_singular_integral(spec, z, f, weight, tol);
}

std::complex<double> holomorphic_remainder(const DomainSpec& spec, const EigenPair& pair, Point z,
                                           double tol) {
  if (!spec.contains(z)) throw std::domain_error("holomorphic_remainder: z must be interior");
  std::complex<double> w;
  if (pair.is_radial()) {
    w = cauchy_radial([&pair](double rho) { return pair.profile(rho); }, spec.r_inner(),
                      spec.r_outer(), z);
  } else {
    w = cauchy_general(spec, [&pair](Point p) { return std::complex<double>(pair.u(p)); }, z, tol);
  }
  return w - v0_field(pair, z);
}

Eigen::VectorXcd cauchy_of_ground_state(const QuadratureMesh& mesh, const EigenPair& pair,
                                        double tol) {
  Eigen::VectorXcd w(mesh.size());
  if (pair.is_radial()) {
    // Nodes are stored ring by ring; the radial integral is shared per ring.
    auto profile = [&pair](double rho) { return pair.profile(rho); };
    const int rings = mesh.n_first;
    const int per_ring = mesh.n_second;
    for (int i = 0; i < rings; ++i) {
      const Eigen::Index first = static_cast<Eigen::Index>(i) * per_ring;
      const double rho = std::abs(mesh.nodes(first));
      const std::complex<double> scaled =
          cauchy_radial(profile, mesh.domain.r_inner(), mesh.domain.r_outer(), rho);
      for (int j = 0; j < per_ring; ++j) {
        const Point z = mesh.nodes(first + j);
        w(first + j) = scaled * rho / z;
      }
    }
    return w;
  }
  const ComplexField u = [&pair](Point p) { return std::complex<double>(pair.u(p)); };
  detail::parallel_for(mesh.size(), [&](std::ptrdiff_t i) {
    w(i) = cauchy_general(mesh.domain, u, mesh.nodes(i), tol);
  });
  return w;
}

EigentestReport eigentest(const DomainSpec& spec, int level) {
  const QuadratureMesh mesh = build_mesh(spec, level);
  const EigenPair pair = ground_state(spec);

  const Eigen::VectorXcd u = sample(mesh, [&pair](Point p) { return std::complex<double>(pair.u(p)); });
  const Eigen::VectorXcd v0 = sample(mesh, [&pair](Point p) { return v0_field(pair, p); });
  const Eigen::VectorXcd w = cauchy_of_ground_state(mesh, pair);
  const Eigen::VectorXcd h = w - v0;

  EigentestReport report;
  report.domain = spec;
  report.level = level;
  report.node_count = static_cast<std::size_t>(mesh.size());
  report.lambda1 = pair.lambda1();
  report.u_norm_sq = inner_product(mesh, u, u).real();
  report.v0_norm_sq = inner_product(mesh, v0, v0).real();
  report.h_norm_sq = inner_product(mesh, h, h).real();
  report.w_norm_sq = inner_product(mesh, w, w).real();
  report.ratio = std::sqrt(report.w_norm_sq / report.u_norm_sq);
  report.threshold = 2.0 / std::sqrt(report.lambda1);
  report.margin = report.ratio - report.threshold;
  report.orthogonality_residual =
      std::abs(inner_product(mesh, v0, h)) / report.w_norm_sq;
  report.pythagoras_residual =
      std::abs(report.w_norm_sq - report.v0_norm_sq - report.h_norm_sq) / report.w_norm_sq;
  report.v0_threshold_residual =
      std::abs(std::sqrt(report.v0_norm_sq / report.u_norm_sq) - report.threshold) /
      report.threshold;
  report.residual_tolerance = level >= 3 ? 1e-6 : 1e-4;
  return report;
}

AnnulusIdentityReport annulus_identity(double r_inner, double r_outer, int level) {
  const DomainSpec spec = DomainSpec::annulus(r_inner, r_outer);
  const EigenPair pair = ground_state(spec);
  const double lambda = pair.lambda1();

  AnnulusIdentityReport report;
  report.r_inner = r_inner;
  report.r_outer = r_outer;
  report.lambda1 = lambda;
  report.hopf_derivative = pair.profile_derivative(r_inner);
  report.coefficient = 2.0 * r_inner * report.hopf_derivative / lambda;

  auto profile = [&pair](double rho) { return pair.profile(rho); };
  const auto points = spec.interior_samples(20);
  report.pointwise_samples = static_cast<int>(points.size());
  for (const Point z : points) {
    const std::complex<double> lhs = cauchy_radial(profile, r_inner, r_outer, z);
    const std::complex<double> rhs = v0_field(pair, z) + report.coefficient / z;
    report.max_pointwise_error = std::max(report.max_pointwise_error, std::abs(lhs - rhs));
  }

  const QuadratureMesh mesh = build_mesh(spec, level);
  const Eigen::VectorXcd v0 = sample(mesh, [&pair](Point p) { return v0_field(pair, p); });
  const Eigen::VectorXcd inv_z = sample(mesh, [](Point p) { return 1.0 / p; });
  const Eigen::VectorXcd f = sample(mesh, [&pair](Point p) { return std::complex<double>(pair.u(p)); });
  const Eigen::VectorXcd w = cauchy_of_ground_state(mesh, pair);

  report.v0_inv_z_product = std::abs(inner_product(mesh, v0, inv_z));
  report.inv_z_norm_sq = inner_product(mesh, inv_z, inv_z).real();
  report.inv_z_norm_sq_exact = 2.0 * pi * std::log(r_outer / r_inner);

  const double f_norm_sq = inner_product(mesh, f, f).real();
  const double ratio_sq = inner_product(mesh, w, w).real() / f_norm_sq;
  report.gap = ratio_sq - 4.0 / lambda;
  report.gap_predicted =
      report.coefficient * report.coefficient * report.inv_z_norm_sq_exact / f_norm_sq;
  report.gap_relative_error = std::abs(report.gap - report.gap_predicted) / report.gap_predicted;
  return report;
}

MultipoleExpansion::MultipoleExpansion(std::vector<std::complex<double>> moments,
                                       DomainSpec domain, double abs_mass)
    : moments_(std::move(moments)), domain_(domain), abs_mass_(abs_mass) {}

std::complex<double> MultipoleExpansion::evaluate(Point z) const {
  const std::complex<double> q = 1.0 / z;
  std::complex<double> acc = 0.0;
  for (auto it = moments_.rbegin(); it != moments_.rend(); ++it) acc = acc * q + *it;
  return pi_factor * acc * q;
}

double MultipoleExpansion::tail_bound(Point z) const {
  const double rho = domain_.circumradius();
  const double r = std::abs(z);
  if (r <= rho) return std::numeric_limits<double>::infinity();
  const int next = order() + 1;
  return pi_factor * abs_mass_ * std::pow(rho / r, next) / (r - rho);
}

MultipoleExpansion multipole_moments(const DomainSpec& spec, const ComplexField& f, int K,
                                     int level) {
  if (K < 0 || K > 12) throw std::invalid_argument("multipole_moments: K must lie in [0, 12]");
  const QuadratureMesh mesh = build_mesh(spec, level);
  const Eigen::VectorXcd values = sample(mesh, f);
  std::vector<std::complex<double>> moments(static_cast<std::size_t>(K) + 1, 0.0);
  double abs_mass = 0.0;
  for (Eigen::Index i = 0; i < mesh.size(); ++i) {
    std::complex<double> power = mesh.weights(i) * values(i);
    abs_mass += mesh.weights(i) * std::abs(values(i));
    for (int k = 0; k <= K; ++k) {
      moments[static_cast<std::size_t>(k)] += power;
      power *= mesh.nodes(i);
    }
  }
  return MultipoleExpansion(std::move(moments), spec, abs_mass);
}

std::complex<double> exterior_cauchy(const DomainSpec& spec, const ComplexField& f, Point z,
                                     int level) {
  if (spec.contains_closure(z, 0.0)) {
    throw std::domain_error("exterior_cauchy: z must lie outside the closed domain");
  }
  const QuadratureMesh mesh = build_mesh(spec, level);
  const Eigen::VectorXcd values = sample(mesh, f);
  std::complex<double> sum = 0.0;
  for (Eigen::Index i = 0; i < mesh.size(); ++i) {
    sum += mesh.weights(i) * values(i) / (z - mesh.nodes(i));
  }
  return sum / pi;
}

}  // namespace cauchylab
