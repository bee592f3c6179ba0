#ifndef CAUCHYLAB_GROUND_STATE_HPP
#define CAUCHYLAB_GROUND_STATE_HPP

#include "cauchylab/domains.hpp"

#include <complex>

namespace cauchylab {

/// First Dirichlet eigenpair of one of the three domain families.
///
/// Normalisation is by coefficients, not by L2 norm: the disk profile is
/// J0(k rho), the rectangle mode is sin(pi x / W) sin(pi y / H), and the
/// annulus profile is +/-(J0(k rho) Y0(k r) - Y0(k rho) J0(k r)) with the
/// sign chosen so that u > 0 inside.
class EigenPair {
 public:
  double lambda1() const { return wavenumber_ * wavenumber_; }
  /// sqrt(lambda1) for radial domains; for rectangles the same quantity.
  double wavenumber() const { return wavenumber_; }
  const DomainSpec& domain() const { return domain_; }

  double u(Point z) const;
  /// d/dz u = (u_x - i u_y) / 2
  std::complex<double> dz_u(Point z) const;

  bool is_radial() const { return domain_.is_radial(); }
  /// Radial profile f(rho) and f'(rho); radial domains only.
  double profile(double rho) const;
  double profile_derivative(double rho) const;

 private:
  friend EigenPair ground_state(const DomainSpec& spec);
  EigenPair(DomainSpec domain, double wavenumber, double sign)
      : domain_(domain), wavenumber_(wavenumber), sign_(sign) {}

  void require_radial() const;

  DomainSpec domain_;
  double wavenumber_;
  double sign_ = 1.0;
  // Annulus constants Y0(k r), J0(k r).
  double y0_inner_ = 0.0;
  double j0_inner_ = 0.0;
};

/// J0(k r) Y0(k R) - J0(k R) Y0(k r), whose smallest positive zero is the
/// annulus ground-state wavenumber.
double annulus_cross_product(double k, double r, double R);

/// Smallest positive zero of annulus_cross_product.  The scan runs in the
/// dimensionless variable k (R - r) over (0, 20] with step 0.05, then refines
/// the first sign change.  Throws std::runtime_error if no bracket.
double annulus_eigen_wavenumber(double r, double R);

EigenPair ground_state(const DomainSpec& spec);

/// v0 = -(4 / lambda1) d/dz u
std::complex<double> v0_field(const EigenPair& pair, Point z);

}  // namespace cauchylab

#endif  // CAUCHYLAB_GROUND_STATE_HPP
