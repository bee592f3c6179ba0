#ifndef CAUCHYLAB_CAUCHY_HPP
#define CAUCHYLAB_CAUCHY_HPP

#include "cauchylab/domains.hpp"
#include "cauchylab/ground_state.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cauchylab {

/// Interior Cauchy transform (1/pi) int_D f(w) / (z - w) dA(w) of a radial
/// function on {r_inner < |w| < r_outer}:
///
///   (2 / z) int_{r_inner}^{|z|} f(rho) rho d(rho).
///
/// Throws std::domain_error if |z| lies outside [r_inner, r_outer].
std::complex<double> cauchy_radial(const std::function<double(double)>& profile, double r_inner,
                                   double r_outer, Point z, int order = 40);

/// Interior Cauchy transform of a general bounded f, to absolute tolerance
/// tol.  Polar coordinates about z remove the singularity.  z may sit on
/// the boundary when f vanishes there (the corner of the square, say).
std::complex<double> cauchy_general(const DomainSpec& spec, const ComplexField& f, Point z,
                                    double tol = 1e-11);

/// C_D u(z) - v0(z); zero on disks, c / z on annuli.
std::complex<double> holomorphic_remainder(const DomainSpec& spec, const EigenPair& pair, Point z,
                                           double tol = 1e-11);

/// C_D u at every node of mesh (radial closed form when available).
Eigen::VectorXcd cauchy_of_ground_state(const QuadratureMesh& mesh, const EigenPair& pair,
                                        double tol = 1e-11);

struct EigentestReport {
  DomainSpec domain = DomainSpec::disk();
  int level = 0;
  std::size_t node_count = 0;
  double lambda1 = 0.0;
  double ratio = 0.0;      // ||C_D u|| / ||u||
  double threshold = 0.0;  // 2 / sqrt(lambda1)
  double margin = 0.0;     // ratio - threshold
  double u_norm_sq = 0.0;
  double v0_norm_sq = 0.0;
  double h_norm_sq = 0.0;
  double w_norm_sq = 0.0;
  /// |<v0, h>| / ||w||^2; the cosine is undefined when h vanishes
  double orthogonality_residual = 0.0;
  /// | ||w||^2 - ||v0||^2 - ||h||^2 | / ||w||^2
  double pythagoras_residual = 0.0;
  /// | ||v0|| / ||u|| - 2 / sqrt(lambda1) | relative to the threshold
  double v0_threshold_residual = 0.0;
  /// Tolerance the two residuals above are held to at this level.
  double residual_tolerance = 0.0;
};

EigentestReport eigentest(const DomainSpec& spec, int level);

/// Checks of the exact decomposition C_A f = v0 + c / z on an annulus.
struct AnnulusIdentityReport {
  double r_inner = 0.0;
  double r_outer = 0.0;
  double lambda1 = 0.0;
  double hopf_derivative = 0.0;  // f'(r_inner)
  double coefficient = 0.0;      // c = 2 r f'(r) / lambda1
  double max_pointwise_error = 0.0;
  int pointwise_samples = 0;
  double v0_inv_z_product = 0.0;  // |<v0, 1/z>|
  double inv_z_norm_sq = 0.0;
  double inv_z_norm_sq_exact = 0.0;  // 2 pi log(R / r)
  double gap = 0.0;                  // ratio^2 - 4 / lambda1
  double gap_predicted = 0.0;        // |c|^2 ||1/z||^2 / ||f||^2
  double gap_relative_error = 0.0;
};

AnnulusIdentityReport annulus_identity(double r_inner, double r_outer, int level);

/// Moments M_k = int_D f(w) w^k dA, k = 0..K, of the exterior Laurent series
/// (1/pi) sum_k M_k / z^{k+1}.
class MultipoleExpansion {
 public:
  MultipoleExpansion(std::vector<std::complex<double>> moments, DomainSpec domain, double abs_mass);

  const std::vector<std::complex<double>>& moments() const { return moments_; }
  const DomainSpec& domain() const { return domain_; }
  int order() const { return static_cast<int>(moments_.size()) - 1; }
  static constexpr double pi_factor = 0.318309886183790671537767526745;  // 1 / pi

  std::complex<double> evaluate(Point z) const;
  /// Bound on the neglected terms at z: (1/pi) int|f| rho^{K+1} / (|z|^{K+1} (|z| - rho)),
  /// rho the circumradius; infinite for |z| <= rho.
  double tail_bound(Point z) const;

 private:
  std::vector<std::complex<double>> moments_;
  DomainSpec domain_;
  double abs_mass_;
};

/// Throws std::invalid_argument for K outside [0, 12].
MultipoleExpansion multipole_moments(const DomainSpec& spec, const ComplexField& f, int K,
                                     int level = 3);

/// Exterior Cauchy transform by direct mesh quadrature (smooth integrand).
/// Throws std::domain_error when z lies in the closed domain.
std::complex<double> exterior_cauchy(const DomainSpec& spec, const ComplexField& f, Point z,
                                     int level = 3);

}  // namespace cauchylab

#endif  // CAUCHYLAB_CAUCHY_HPP
