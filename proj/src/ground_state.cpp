#include "cauchylab/ground_state.hpp"

#include "cauchylab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchylab {

using std::numbers::pi;

double annulus_cross_product(double k, double r, double R) {
  return bessel_j(0, k * r) * bessel_y(0, k * R) - bessel_j(0, k * R) * bessel_y(0, k * r);
}

double annulus_eigen_wavenumber(double r, double R) {
  if (!(r > 0.0 && r < R)) throw std::invalid_argument("annulus_eigen_wavenumber: need 0 < r < R");
  // kappa = k (R - r) lies in (j01 (1 - r/R), pi] for every ratio.
  const double width = R - r;
  auto cross = [r, R, width](double kappa) { return annulus_cross_product(kappa / width, r, R); };
  const auto bracket = scan_for_sign_change(cross, 0.0, 20.0, 0.05, 1e-13);
  if (!bracket) throw std::runtime_error("annulus_eigen_wavenumber: no sign change on (0, 20]");
  return bracketed_root(cross, *bracket) / width;
}

EigenPair ground_state(const DomainSpec& spec) {
  switch (spec.kind()) {
    case DomainKind::disk:
      return EigenPair(spec, bessel_j0_first_zero() / spec.radius(), 1.0);
    case DomainKind::rectangle: {
      const double kx = pi / spec.width();
      const double ky = pi / spec.height();
      return EigenPair(spec, std::sqrt(kx * kx + ky * ky), 1.0);
    }
    case DomainKind::annulus: {
      const double k = annulus_eigen_wavenumber(spec.r_inner(), spec.r_outer());
      EigenPair pair(spec, k, 1.0);
      pair.y0_inner_ = bessel_y(0, k * spec.r_inner());
      pair.j0_inner_ = bessel_j(0, k * spec.r_inner());
      const double mid = 0.5 * (spec.r_inner() + spec.r_outer());
      if (pair.profile(mid) < 0.0) pair.sign_ = -1.0;
      return pair;
    }
  }
  throw std::logic_error("ground_state: unknown domain");
}

void EigenPair::require_radial() const {
  if (!is_radial()) throw std::logic_error("EigenPair: radial profile requested on a rectangle");
}

double EigenPair::profile(double rho) const {
  require_radial();
  const double x = wavenumber_ * rho;
  if (domain_.kind() == DomainKind::disk) return bessel_j(0, x);
  return sign_ * (bessel_j(0, x) * y0_inner_ - bessel_y(0, x) * j0_inner_);
}

double EigenPair::profile_derivative(double rho) const {
  require_radial();
  const double k = wavenumber_;
  const double x = k * rho;
  if (domain_.kind() == DomainKind::disk) return -k * bessel_j(1, x);
  return sign_ * k * (-bessel_j(1, x) * y0_inner_ + bessel_y(1, x) * j0_inner_);
}

double EigenPair::u(Point z) const {
  if (domain_.kind() == DomainKind::rectangle) {
    return std::sin(pi * z.real() / domain_.width()) * std::sin(pi * z.imag() / domain_.height());
  }
  return profile(std::abs(z));
}

std::complex<double> EigenPair::dz_u(Point z) const {
  if (domain_.kind() == DomainKind::rectangle) {
    const double kx = pi / domain_.width();
    const double ky = pi / domain_.height();
    const double x = kx * z.real();
    const double y = ky * z.imag();
    const double ux = kx * std::cos(x) * std::sin(y);
    const double uy = ky * std::sin(x) * std::cos(y);
    return 0.5 * std::complex<double>(ux, -uy);
  }
  // (e^{-i theta} / 2) f'(rho) = conj(z) f'(rho) / (2 rho)
  const double rho = std::abs(z);
  if (rho == 0.0) return 0.0;
  return std::conj(z) * (profile_derivative(rho) / (2.0 * rho));
}

std::complex<double> v0_field(const EigenPair& pair, Point z) {
  return -(4.0 / pair.lambda1()) * pair.dz_u(z);
}

}  // namespace cauchylab
