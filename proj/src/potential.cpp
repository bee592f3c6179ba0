#include "cauchylab/potential.hpp"

#include "cauchylab/quadrature.hpp"
#include "cauchylab/specfun.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numbers>

namespace cauchylab {

using std::numbers::pi;

double unit_potential(const DomainSpec& spec, Point x, double tol) {
  const ComplexField one = [](Point) { return std::complex<double>(1.0); };
  return polar_singular_integral(spec, x, one, [](double) { return std::complex<double>(1.0); }, tol)
      .real();
}

SdMatrix assemble_sd(const QuadratureMesh& mesh, DiagonalRule rule) {
  const Eigen::Index n = mesh.size();
  if (n > kMaxNystromNodes) throw std::length_error("assemble_sd: more than 20000 nodes");

  SdMatrix m;
  m.mesh = mesh;
  m.diagonal_rule = rule;
  m.entries.resize(n, n);
  const Eigen::VectorXd sqrt_w = mesh.weights.cwiseSqrt();
  // Off-diagonal kernel sums, sum_{j != i} w_j / |x_i - x_j|.
  Eigen::VectorXd off_sums = Eigen::VectorXd::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const double k = 1.0 / std::abs(mesh.nodes(i) - mesh.nodes(j));
      const double a = sqrt_w(i) * k * sqrt_w(j);
      m.entries(i, j) = a;
      m.entries(j, i) = a;
      off_sums(i) += mesh.weights(j) * k;
      off_sums(j) += mesh.weights(i) * k;
    }
  }

  m.row_sums.resize(n);
  if (rule == DiagonalRule::equal_area_disk) {
    for (Eigen::Index i = 0; i < n; ++i) {
      m.entries(i, i) = 2.0 * std::sqrt(pi * mesh.weights(i));
      m.row_sums(i) = off_sums(i) + m.entries(i, i);
    }
    return m;
  }

  Eigen::VectorXd potentials(n);
  detail::parallel_for(n, [&](std::ptrdiff_t i) {
    potentials(i) = unit_potential(mesh.domain, mesh.nodes(i));
  });
  for (Eigen::Index i = 0; i < n; ++i) {
    m.entries(i, i) = potentials(i) - off_sums(i);
    m.row_sums(i) = potentials(i);
  }
  return m;
}

double sd_quadratic_form(const SdMatrix& matrix, const RealField& f) {
  const QuadratureMesh& mesh = matrix.mesh;
  Eigen::VectorXd g(mesh.size());
  for (Eigen::Index i = 0; i < mesh.size(); ++i) g(i) = std::sqrt(mesh.weights(i)) * f(mesh.nodes(i));
  return g.dot(matrix.entries * g);
}

double lambda_max(const SdMatrix& matrix, double tol) {
  return power_iteration(matrix.entries, tol).value;
}

double radial_kernel(double rho, double sigma) {
  const double s = rho + sigma;
  return 4.0 * elliptic_k(4.0 * rho * sigma / (s * s)) / s;
}

double radial_sd_lambda_max(double radius, int n_nodes) {
  if (n_nodes < 16) throw std::invalid_argument("radial_sd_lambda_max: need at least 16 nodes");
  if (!(radius > 0.0)) throw std::invalid_argument("radial_sd_lambda_max: radius must be positive");
  constexpr int panel_order = 8;
  const int panels = (n_nodes + panel_order - 1) / panel_order;
  const int n = panels * panel_order;
  const auto& ref = cached_gauss_legendre(panel_order);
  Eigen::VectorXd s(n);
  Eigen::VectorXd w(n);
  const double h = radius / panels;
  for (int p = 0; p < panels; ++p) {
    for (int q = 0; q < panel_order; ++q) {
      s(p * panel_order + q) = h * (p + 0.5 * (ref.nodes(q) + 1.0));
      w(p * panel_order + q) = 0.5 * h * ref.weights(q);
    }
  }

  // (S f)(rho_i) = int K0(rho_i, sigma) g(sigma) d(sigma), g = f sigma.  With
  // L(sigma) = -(2/rho_i) log|rho_i - sigma|:
  //   sum_{j != i} w_j K0_ij g_j + g_i [ int_0^R L - sum_{j != i} w_j L_ij + w_i lim_{sigma->rho_i}(K0 - L) ]
  const Eigen::VectorXd scale = (w.array() * s.array()).sqrt();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    const double rho = s(i);
    const double exact_log = (rho * std::log(rho) - rho) +
                             ((radius - rho) * std::log(radius - rho) - (radius - rho));
    double diag = -(2.0 / rho) * exact_log + w(i) * (2.0 / rho) * std::log(8.0 * rho);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      a(i, j) = scale(i) * radial_kernel(rho, s(j)) * scale(j);
      diag -= w(j) * (-(2.0 / rho) * std::log(std::abs(rho - s(j))));
    }
    a(i, i) = diag * s(i);
  }
  // Kernel symmetry in (rho, sigma) makes a symmetric up to rounding.
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  return power_iteration(sym, 1e-14).value;
}

SchurBound schur_bound(const DomainSpec& spec, int grid_side) {
  if (grid_side < 3) throw std::invalid_argument("schur_bound: grid_side must be at least 3");
  Point lo;
  Point hi;
  if (spec.kind() == DomainKind::rectangle) {
    lo = {0.0, 0.0};
    hi = {spec.width(), spec.height()};
  } else {
    lo = {-spec.radius(), -spec.radius()};
    hi = {spec.radius(), spec.radius()};
  }
  const double dx = (hi.real() - lo.real()) / (grid_side - 1);
  const double dy = (hi.imag() - lo.imag()) / (grid_side - 1);

  SchurBound best;
  best.value = -1.0;
  best.grid_spacing = std::max(dx, dy);
  for (int i = 0; i < grid_side; ++i) {
    for (int j = 0; j < grid_side; ++j) {
      const Point x(lo.real() + i * dx, lo.imag() + j * dy);
      if (!spec.contains(x)) continue;
      const double v = unit_potential(spec, x);
      if (v > best.value) {
        best.value = v;
        best.argmax = x;
      }
    }
  }

  double step = 0.5 * best.grid_spacing;
  const double min_step = 1e-7 * spec.diameter();
  const Point directions[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  while (step > min_step) {
    bool improved = false;
    for (const Point d : directions) {
      const Point x = best.argmax + step * d;
      if (!spec.contains(x)) continue;
      const double v = unit_potential(spec, x);
      if (v > best.value) {
        best.value = v;
        best.argmax = x;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  best.value /= 2.0 * pi;
  return best;
}

SharpConstantReport sharp_constant(const DomainSpec& spec, int max_level,
                                   const SharpConstantOptions& options) {
  if (max_level < 2) throw std::invalid_argument("sharp_constant: max_level must be at least 2");
  SharpConstantReport report;
  SdMatrix finest;
  for (int level = max_level - 2; level <= max_level; ++level) {
    const QuadratureMesh mesh = build_mesh(spec, level, options.resolution);
    SdMatrix matrix = assemble_sd(mesh, options.diagonal_rule);
    SharpConstantLevel row;
    row.level = level;
    row.node_count = static_cast<std::size_t>(mesh.size());
    row.spacing = mesh.spacing();
    row.lambda_max = lambda_max(matrix, options.tol);
    row.c_estimate = row.lambda_max / (2.0 * pi);
    report.per_level.push_back(row);
    if (level == max_level) finest = std::move(matrix);
  }

  const double c0 = report.per_level[0].c_estimate;
  const double c1 = report.per_level[1].c_estimate;
  const double c2 = report.per_level[2].c_estimate;
  const double ratio = (c1 - c0) / (c2 - c1);
  report.fitted_order = (std::isfinite(ratio) && ratio > 0.0) ? std::log2(ratio) : 0.0;
  report.extrapolation_order =
      (report.fitted_order >= 0.5 && report.fitted_order <= 4.0) ? report.fitted_order : 1.0;
  report.extrapolated = c2 + (c2 - c1) / (std::pow(2.0, report.extrapolation_order) - 1.0);

  // <S_D 1, 1> = sum_i w_i (S_D 1)(x_i)
  report.lower_bound =
      finest.mesh.weights.dot(finest.row_sums) / (2.0 * pi * spec.area());
  report.schur_upper = schur_bound(spec).value;
  if (spec.kind() == DomainKind::disk) {
    report.radial_value = radial_sd_lambda_max(spec.radius(), options.radial_nodes) / (2.0 * pi);
  }
  return report;
}

}  // namespace cauchylab
