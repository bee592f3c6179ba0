#ifndef CAUCHYLAB_DOMAINS_HPP
#define CAUCHYLAB_DOMAINS_HPP

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace cauchylab {

/// Points of the plane, identified with complex numbers.
using Point = std::complex<double>;
using ComplexField = std::function<std::complex<double>(Point)>;
using RealField = std::function<double(Point)>;

enum class DomainKind { disk, annulus, rectangle };

/// One of the three domain families: a disk centred at the origin, an
/// annulus centred at the origin, or the rectangle [0, width] x [0, height].
class DomainSpec {
 public:
  static DomainSpec disk(double radius = 1.0);
  static DomainSpec annulus(double r_inner, double r_outer);
  static DomainSpec rectangle(double width, double height);
  static DomainSpec unit_square() { return rectangle(1.0, 1.0); }

  DomainKind kind() const { return kind_; }
  bool is_radial() const { return kind_ != DomainKind::rectangle; }

  /// Disk radius (or annulus outer radius).
  double radius() const { return outer_; }
  /// Inner radius; zero for a disk.
  double r_inner() const { return inner_; }
  double r_outer() const { return outer_; }
  double width() const { return width_; }
  double height() const { return height_; }

  double area() const;
  /// Largest |w| over the closure.
  double circumradius() const;
  double diameter() const;
  Point center() const;

  /// Membership in the open domain.
  bool contains(Point z) const;
  /// Membership in the closure, with an absolute slack.
  bool contains_closure(Point z, double slack = 1e-12) const;
  /// Distance from z to the boundary (z in the closure).
  double distance_to_boundary(Point z) const;
  /// n deterministic, well-spread points of the open domain.
  std::vector<Point> interior_samples(int n) const;
  /// n points spread over every boundary component.
  std::vector<Point> boundary_samples(int n) const;

  std::string name() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(DomainKind kind, double inner, double outer, double width, double height)
      : kind_(kind), inner_(inner), outer_(outer), width_(width), height_(height) {}

  DomainKind kind_;
  double inner_ = 0.0;
  double outer_ = 0.0;
  double width_ = 0.0;
  double height_ = 0.0;
};

/// Node counts of a level-0 mesh: Gauss-Legendre nodes radially (or per
/// Cartesian axis) and trapezoid nodes in angle.  Each level doubles both.
struct MeshResolution {
  int radial = 16;
  int angular = 32;
};

inline constexpr int kMaxMeshLevel = 8;

/// Tensor-product quadrature on a domain; the discrete L2(D).
struct QuadratureMesh {
  Eigen::VectorXcd nodes;
  Eigen::VectorXd weights;
  int level = 0;
  DomainSpec domain = DomainSpec::disk();
  /// Radial (or x) and angular (or y) node counts.
  int n_first = 0;
  int n_second = 0;

  Eigen::Index size() const { return weights.size(); }
  /// Largest cell extent; halves with each level.
  double spacing() const;
};

QuadratureMesh build_mesh(const DomainSpec& spec, int level, MeshResolution resolution = {});

struct RadialGrid {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  double a = 0.0;
  double b = 0.0;
};

/// n-point Gauss-Legendre rule on (a, b).
RadialGrid build_radial_grid(double a, double b, int n);

/// Values of f at the mesh nodes.  Throws std::domain_error on a non-finite sample.
Eigen::VectorXcd sample(const QuadratureMesh& mesh, const ComplexField& f);

std::complex<double> integrate(const QuadratureMesh& mesh, const ComplexField& f);
std::complex<double> integrate(const QuadratureMesh& mesh, const Eigen::VectorXcd& samples);

/// sum_i w_i f(x_i) conj(g(x_i))
std::complex<double> inner_product(const QuadratureMesh& mesh, const ComplexField& f,
                                   const ComplexField& g);
std::complex<double> inner_product(const QuadratureMesh& mesh, const Eigen::VectorXcd& f,
                                   const Eigen::VectorXcd& g);

double l2_norm(const QuadratureMesh& mesh, const ComplexField& f);
double l2_norm(const QuadratureMesh& mesh, const Eigen::VectorXcd& f);

/// Weakly singular area integral in polar coordinates about z:
///
///   integral over D of g(w) * angular_weight(arg(w - z)) / |w - z| dA(w).
///
/// The Jacobian cancels the 1/|w - z| singularity, leaving smooth integrals
/// along rays (fixed Gauss-Legendre) and an adaptive Gauss-Kronrod integral
/// in angle split at the kinks of the exit distance.  z may lie on the
/// boundary.  abs_tol bounds the angular error estimate.
std::complex<double> polar_singular_integral(
    const DomainSpec& spec, Point z, const ComplexField& g,
    const std::function<std::complex<double>(double)>& angular_weight, double abs_tol);

}  // namespace cauchylab

#endif  // CAUCHYLAB_DOMAINS_HPP
