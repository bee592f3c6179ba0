#ifndef CAUCHYLAB_POTENTIAL_HPP
#define CAUCHYLAB_POTENTIAL_HPP

#include "cauchylab/domains.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cauchylab {

/// How the Nystrom matrix of the kernel 1/|x - y| treats the self term.
enum class DiagonalRule {
  /// A_ii = I(x_i) - sum_{j != i} w_j / |x_i - x_j|, where I(x) is the
  /// integral of 1/|x - y| over D.  Every row then sums to I(x_i) exactly.
  row_integral_subtraction,
  /// A_ii = 2 sqrt(pi w_i): the self integral over a disk cell of equal area.
  equal_area_disk,
};

inline constexpr Eigen::Index kMaxNystromNodes = 20000;

/// Symmetrised Nystrom matrix A_ij = sqrt(w_i) K(x_i, x_j) sqrt(w_j) of S_D.
struct SdMatrix {
  Eigen::MatrixXd entries;
  QuadratureMesh mesh;
  DiagonalRule diagonal_rule = DiagonalRule::row_integral_subtraction;
  /// sum_j (w_j K_ij + diagonal correction): the discrete S_D 1 at each node.
  Eigen::VectorXd row_sums;
};

/// Throws std::length_error above kMaxNystromNodes nodes.
SdMatrix assemble_sd(const QuadratureMesh& mesh,
                     DiagonalRule rule = DiagonalRule::row_integral_subtraction);

/// Integral of 1/|x - y| over D, by polar quadrature about x.
double unit_potential(const DomainSpec& spec, Point x, double tol = 1e-12);

/// <S_D f, f> from the Nystrom matrix.
double sd_quadratic_form(const SdMatrix& matrix, const RealField& f);

struct SpectralEstimate {
  double value = 0.0;
  Eigen::VectorXd vector;
  int iterations = 0;
};

/// Power iteration from the all-ones vector for a symmetric matrix with a
/// dominant positive eigenvalue.  Stops once the Rayleigh quotient changes
/// by less than tol relative; throws std::runtime_error at max_iterations.
template <typename Derived>
SpectralEstimate power_iteration(const Eigen::MatrixBase<Derived>& a, double tol,
                                 int max_iterations = 10000) {
  if (!(tol > 0.0)) throw std::invalid_argument("power_iteration: tol must be positive");
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("power_iteration: need a non-empty square matrix");
  }
  using Vector = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>;
  Vector v = Vector::Ones(a.rows()) / std::sqrt(static_cast<double>(a.rows()));
  double previous = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    Vector av = a * v;
    const double rayleigh = v.dot(av);
    const double norm = av.norm();
    if (norm == 0.0) return {0.0, v, it};
    v = av / norm;
    if (it > 1 && std::abs(rayleigh - previous) <= tol * std::abs(rayleigh)) {
      return {rayleigh, v, it};
    }
    previous = rayleigh;
  }
  throw std::runtime_error("power_iteration: iteration cap reached");
}

double lambda_max(const SdMatrix& matrix, double tol = 1e-12);

/// Azimuthal average of the kernel, K0(rho, sigma) = 4 K(m) / (rho + sigma)
/// with m = 4 rho sigma / (rho + sigma)^2.
double radial_kernel(double rho, double sigma);

/// Top eigenvalue of S_D on the disk of the given radius, restricted to
/// radial functions: (S f)(rho) = int_0^R K0(rho, sigma) f(sigma) sigma d(sigma).
/// Composite 8-point Gauss panels; the logarithmic diagonal singularity
/// -(2/rho) log|rho - sigma| is subtracted and integrated exactly.
double radial_sd_lambda_max(double radius, int n_nodes = 512);

struct SchurBound {
  double value = 0.0;  // (1/2pi) sup_x int_D dy / |x - y|
  Point argmax;
  double grid_spacing = 0.0;
};

/// Maximum over a (grid_side x grid_side) grid on the bounding box, polished
/// by a compass search from the best grid point.
SchurBound schur_bound(const DomainSpec& spec, int grid_side = 41);

struct SharpConstantLevel {
  int level = 0;
  std::size_t node_count = 0;
  double spacing = 0.0;
  double lambda_max = 0.0;
  double c_estimate = 0.0;  // lambda_max / (2 pi)
};

struct SharpConstantOptions {
  MeshResolution resolution{6, 12};
  DiagonalRule diagonal_rule = DiagonalRule::row_integral_subtraction;
  double tol = 1e-12;
  int radial_nodes = 512;
};

struct SharpConstantReport {
  std::vector<SharpConstantLevel> per_level;
  /// Convergence order fitted from the last three levels.
  double fitted_order = 0.0;
  /// Order used for extrapolation (the fitted order when in [0.5, 4], else 1).
  double extrapolation_order = 1.0;
  double extrapolated = 0.0;
  /// Rayleigh quotient of f = 1: <S_D 1, 1> / (2 pi |D|).
  double lower_bound = 0.0;
  double schur_upper = 0.0;
  std::optional<double> radial_value;
};

/// Nystrom estimates on mesh levels max_level-2 .. max_level, Richardson
/// extrapolation, Rayleigh lower bound and Schur upper bound.  The radial
/// reduction is attached for disks.  Requires max_level >= 2.
SharpConstantReport sharp_constant(const DomainSpec& spec, int max_level,
                                   const SharpConstantOptions& options = {});

}  // namespace cauchylab

#endif  // CAUCHYLAB_POTENTIAL_HPP
