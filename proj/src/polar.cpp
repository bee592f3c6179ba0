#include "cauchylab/domains.hpp"
#include "cauchylab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cauchylab {
namespace {

using std::numbers::pi;
using AngularWeight = std::function<std::complex<double>(double)>;

constexpr int kRayOrder = 24;

// integral of g(z + t d) for t in [t0, t1]
std::complex<double> ray_integral(const ComplexField& g, Point z, Point d, double t0, double t1) {
  if (!(t1 > t0)) return 0.0;
  static const GaussRule<double>& rule = cached_gauss_legendre(kRayOrder);
  const double half = 0.5 * (t1 - t0);
  const double mid = 0.5 * (t1 + t0);
  std::complex<double> sum = 0.0;
  for (int k = 0; k < kRayOrder; ++k) sum += rule.weights(k) * g(z + (mid + half * rule.nodes(k)) * d);
  return sum * half;
}

// Exit distance from z along unit direction d for the circle |w| = radius.
double circle_exit(Point z, Point d, double radius) {
  const double b = z.real() * d.real() + z.imag() * d.imag();
  const double disc = radius * radius - std::norm(z) + b * b;
  return std::max(0.0, -b + std::sqrt(std::max(0.0, disc)));
}

double rectangle_exit(Point z, Point d, double width, double height) {
  double t = std::numeric_limits<double>::infinity();
  if (d.real() > 0.0) t = std::min(t, (width - z.real()) / d.real());
  if (d.real() < 0.0) t = std::min(t, -z.real() / d.real());
  if (d.imag() > 0.0) t = std::min(t, (height - z.imag()) / d.imag());
  if (d.imag() < 0.0) t = std::min(t, -z.imag() / d.imag());
  return std::max(0.0, t);
}

std::complex<double> integrate_pieces(const std::vector<double>& breaks,
                                      const std::function<std::complex<double>(double)>& f,
                                      double abs_tol) {
  std::complex<double> total = 0.0;
  const double piece_tol = abs_tol / static_cast<double>(std::max<std::size_t>(1, breaks.size() - 1));
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (breaks[k + 1] > breaks[k]) total += integrate_adaptive(f, breaks[k], breaks[k + 1], piece_tol).value;
  }
  return total;
}

std::complex<double> disk_integral(double radius, Point z, const ComplexField& g,
                                   const AngularWeight& weight, double abs_tol) {
  const double alpha = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  auto integrand = [&](double phi) {
    const Point d = std::polar(1.0, phi);
    return weight(phi) * ray_integral(g, z, d, 0.0, circle_exit(z, d, radius));
  };
  return integrate_pieces({alpha, alpha + pi, alpha + 2.0 * pi}, integrand, abs_tol);
}

std::complex<double> rectangle_integral(double width, double height, Point z,
                                        const ComplexField& g, const AngularWeight& weight,
                                        double abs_tol) {
  const Point corners[] = {{0.0, 0.0}, {width, 0.0}, {width, height}, {0.0, height}};
  const double scale = std::max(width, height);
  std::vector<double> angles;
  for (const Point& c : corners) {
    if (std::abs(c - z) > 1e-14 * scale) angles.push_back(std::arg(c - z));
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> breaks = angles;
  breaks.push_back(angles.front() + 2.0 * pi);
  auto integrand = [&](double phi) {
    const Point d = std::polar(1.0, phi);
    return weight(phi) * ray_integral(g, z, d, 0.0, rectangle_exit(z, d, width, height));
  };
  return integrate_pieces(breaks, integrand, abs_tol);
}

// Rays that miss the hole are integrated directly.  Rays through the hole
// (the shadow cone of half-angle psi_t about the direction to the origin)
// use phi = beta + psi_t sin(sigma), which removes the square-root behaviour
// of the chord endpoints at the tangent directions.
std::complex<double> annulus_integral(double r_in, double r_out, Point z, const ComplexField& g,
                                      const AngularWeight& weight, double abs_tol) {
  const double d0 = std::abs(z);
  const double beta = std::arg(-z);
  const double sin_t = std::min(1.0, r_in / d0);
  const double psi_t = std::asin(sin_t);

  auto lit = [&](double phi) {
    const Point d = std::polar(1.0, phi);
    return weight(phi) * ray_integral(g, z, d, 0.0, circle_exit(z, d, r_out));
  };
  auto shadow = [&](double sigma) {
    const double psi = psi_t * std::sin(sigma);
    const double phi = beta + psi;
    const Point d = std::polar(1.0, phi);
    const double s = std::sin(psi);
    const double half_chord = d0 * std::sqrt(std::max(0.0, (sin_t - s) * (sin_t + s)));
    const double centre = d0 * std::cos(psi);
    const double t1 = std::max(0.0, centre - half_chord);
    const double t2 = centre + half_chord;
    const double t_out = circle_exit(z, d, r_out);
    const std::complex<double> rays =
        ray_integral(g, z, d, 0.0, t1) + ray_integral(g, z, d, t2, t_out);
    return weight(phi) * rays * (psi_t * std::cos(sigma));
  };
  const double half_tol = 0.5 * abs_tol;
  return integrate_pieces({beta + psi_t, beta + pi, beta + 2.0 * pi - psi_t}, lit, half_tol) +
         integrate_pieces({-0.5 * pi, 0.0, 0.5 * pi}, shadow, half_tol);
}

}  // namespace

std::complex<double> polar_singular_integral(const DomainSpec& spec, Point z, const ComplexField& g,
                                             const AngularWeight& angular_weight, double abs_tol) {
  if (!spec.contains_closure(z, 1e-12 * spec.diameter())) {
    throw std::domain_error("polar_singular_integral: point outside the closed domain");
  }
  if (!(abs_tol > 0.0)) throw std::invalid_argument("polar_singular_integral: tol must be positive");
  switch (spec.kind()) {
    case DomainKind::disk: return disk_integral(spec.radius(), z, g, angular_weight, abs_tol);
    case DomainKind::annulus:
      return annulus_integral(spec.r_inner(), spec.r_outer(), z, g, angular_weight, abs_tol);
    case DomainKind::rectangle:
      return rectangle_integral(spec.width(), spec.height(), z, g, angular_weight, abs_tol);
  }
  return 0.0;
}

}  // namespace cauchylab
