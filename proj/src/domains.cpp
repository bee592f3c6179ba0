#include "cauchylab/domains.hpp"

#include "cauchylab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cauchylab {

using std::numbers::pi;

DomainSpec DomainSpec::disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("disk: radius must be positive");
  }
  return DomainSpec(DomainKind::disk, 0.0, radius, 0.0, 0.0);
}

DomainSpec DomainSpec::annulus(double r_inner, double r_outer) {
  if (!(r_inner > 0.0 && r_inner < r_outer) || !std::isfinite(r_outer)) {
    throw std::invalid_argument("annulus: need 0 < r_inner < r_outer");
  }
  return DomainSpec(DomainKind::annulus, r_inner, r_outer, 0.0, 0.0);
}

DomainSpec DomainSpec::rectangle(double width, double height) {
  if (!(width > 0.0 && height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw std::invalid_argument("rectangle: sides must be positive");
  }
  return DomainSpec(DomainKind::rectangle, 0.0, 0.0, width, height);
}

double DomainSpec::area() const {
  switch (kind_) {
    case DomainKind::disk: return pi * outer_ * outer_;
    case DomainKind::annulus: return pi * (outer_ * outer_ - inner_ * inner_);
    case DomainKind::rectangle: return width_ * height_;
  }
  return 0.0;
}

double DomainSpec::circumradius() const {
  if (kind_ == DomainKind::rectangle) return std::hypot(width_, height_);
  return outer_;
}

double DomainSpec::diameter() const {
  if (kind_ == DomainKind::rectangle) return std::hypot(width_, height_);
  return 2.0 * outer_;
}

Point DomainSpec::center() const {
  if (kind_ == DomainKind::rectangle) return {0.5 * width_, 0.5 * height_};
  return {0.0, 0.0};
}

bool DomainSpec::contains(Point z) const {
  switch (kind_) {
    case DomainKind::disk: return std::abs(z) < outer_;
    case DomainKind::annulus: {
      const double r = std::abs(z);
      return r > inner_ && r < outer_;
    }
    case DomainKind::rectangle:
      return z.real() > 0.0 && z.real() < width_ && z.imag() > 0.0 && z.imag() < height_;
  }
  return false;
}

bool DomainSpec::contains_closure(Point z, double slack) const {
  switch (kind_) {
    case DomainKind::disk: return std::abs(z) <= outer_ + slack;
    case DomainKind::annulus: {
      const double r = std::abs(z);
      return r >= inner_ - slack && r <= outer_ + slack;
    }
    case DomainKind::rectangle:
      return z.real() >= -slack && z.real() <= width_ + slack && z.imag() >= -slack &&
             z.imag() <= height_ + slack;
  }
  return false;
}

double DomainSpec::distance_to_boundary(Point z) const {
  switch (kind_) {
    case DomainKind::disk: return std::max(0.0, outer_ - std::abs(z));
    case DomainKind::annulus: {
      const double r = std::abs(z);
      return std::max(0.0, std::min(r - inner_, outer_ - r));
    }
    case DomainKind::rectangle:
      return std::max(0.0, std::min({z.real(), width_ - z.real(), z.imag(), height_ - z.imag()}));
  }
  return 0.0;
}

std::vector<Point> DomainSpec::interior_samples(int n) const {
  constexpr double golden_angle = 2.399963229728653;
  constexpr double golden_fraction = 0.6180339887498949;
  std::vector<Point> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double s = (k + 0.5) / n;
    if (kind_ == DomainKind::rectangle) {
      const double t = std::fmod(0.5 + k * golden_fraction, 1.0);
      out.emplace_back(width_ * (0.05 + 0.9 * s), height_ * (0.05 + 0.9 * t));
    } else {
      const double rho = inner_ + (outer_ - inner_) * (0.05 + 0.9 * s);
      out.push_back(std::polar(rho, golden_angle * k));
    }
  }
  return out;
}

std::vector<Point> DomainSpec::boundary_samples(int n) const {
  std::vector<Point> out;
  out.reserve(n);
  switch (kind_) {
    case DomainKind::disk:
      for (int k = 0; k < n; ++k) out.push_back(std::polar(outer_, 2.0 * pi * (k + 0.5) / n));
      break;
    case DomainKind::annulus: {
      const int inner_count = n / 2;
      for (int k = 0; k < inner_count; ++k) {
        out.push_back(std::polar(inner_, 2.0 * pi * (k + 0.5) / inner_count));
      }
      for (int k = 0; k < n - inner_count; ++k) {
        out.push_back(std::polar(outer_, 2.0 * pi * (k + 0.5) / (n - inner_count)));
      }
      break;
    }
    case DomainKind::rectangle: {
      const double perimeter = 2.0 * (width_ + height_);
      for (int k = 0; k < n; ++k) {
        double s = perimeter * (k + 0.5) / n;
        if (s < width_) {
          out.emplace_back(s, 0.0);
        } else if ((s -= width_) < height_) {
          out.emplace_back(width_, s);
        } else if ((s -= height_) < width_) {
          out.emplace_back(width_ - s, height_);
        } else {
          out.emplace_back(0.0, height_ - (s - width_));
        }
      }
      break;
    }
  }
  return out;
}

std::string DomainSpec::name() const {
  std::ostringstream os;
  switch (kind_) {
    case DomainKind::disk: os << "disk(R=" << outer_ << ")"; break;
    case DomainKind::annulus: os << "annulus(r=" << inner_ << ",R=" << outer_ << ")"; break;
    case DomainKind::rectangle: os << "rectangle(" << width_ << "x" << height_ << ")"; break;
  }
  return os.str();
}

double QuadratureMesh::spacing() const {
  if (domain.kind() == DomainKind::rectangle) {
    return std::max(domain.width() / n_first, domain.height() / n_second) * pi / 2.0;
  }
  const double radial = (domain.r_outer() - domain.r_inner()) / n_first * pi / 2.0;
  return std::max(radial, 2.0 * pi * domain.r_outer() / n_second);
}

QuadratureMesh build_mesh(const DomainSpec& spec, int level, MeshResolution resolution) {
  if (level < 0 || level > kMaxMeshLevel) {
    throw std::out_of_range("build_mesh: level must lie in [0, 8]");
  }
  if (resolution.radial < 1 || resolution.angular < 1) {
    throw std::invalid_argument("build_mesh: empty base resolution");
  }
  QuadratureMesh mesh;
  mesh.level = level;
  mesh.domain = spec;
  const int scale = 1 << level;

  if (spec.kind() == DomainKind::rectangle) {
    const int n = resolution.radial * scale;
    const auto gx = map_rule(gauss_legendre<double>(n), 0.0, spec.width());
    const auto gy = map_rule(gauss_legendre<double>(n), 0.0, spec.height());
    mesh.n_first = n;
    mesh.n_second = n;
    mesh.nodes.resize(static_cast<Eigen::Index>(n) * n);
    mesh.weights.resize(static_cast<Eigen::Index>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Eigen::Index k = static_cast<Eigen::Index>(i) * n + j;
        mesh.nodes(k) = Point(gx.nodes(i), gy.nodes(j));
        mesh.weights(k) = gx.weights(i) * gy.weights(j);
      }
    }
    return mesh;
  }

  const int nr = resolution.radial * scale;
  const int nt = resolution.angular * scale;
  const auto gr = map_rule(gauss_legendre<double>(nr), spec.r_inner(), spec.r_outer());
  mesh.n_first = nr;
  mesh.n_second = nt;
  mesh.nodes.resize(static_cast<Eigen::Index>(nr) * nt);
  mesh.weights.resize(static_cast<Eigen::Index>(nr) * nt);
  const double dtheta = 2.0 * pi / nt;
  for (int i = 0; i < nr; ++i) {
    const double rho = gr.nodes(i);
    const double w = gr.weights(i) * rho * dtheta;
    for (int j = 0; j < nt; ++j) {
      const Eigen::Index k = static_cast<Eigen::Index>(i) * nt + j;
      mesh.nodes(k) = std::polar(rho, dtheta * j);
      mesh.weights(k) = w;
    }
  }
  return mesh;
}

RadialGrid build_radial_grid(double a, double b, int n) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("build_radial_grid: need a < b");
  }
  if (n < 2) throw std::invalid_argument("build_radial_grid: need n >= 2");
  const auto rule = map_rule(cached_gauss_legendre(n), a, b);
  return {rule.nodes, rule.weights, a, b};
}

Eigen::VectorXcd sample(const QuadratureMesh& mesh, const ComplexField& f) {
  Eigen::VectorXcd values(mesh.size());
  for (Eigen::Index i = 0; i < mesh.size(); ++i) {
    values(i) = f(mesh.nodes(i));
    if (!std::isfinite(values(i).real()) || !std::isfinite(values(i).imag())) {
      throw std::domain_error("sample: non-finite value at a mesh node");
    }
  }
  return values;
}

namespace {

// Neumaier-compensated sum of term(i), i = 0..n-1, per component.
template <typename Term>
std::complex<double> compensated_sum(Eigen::Index n, const Term& term) {
  double sum[2] = {0.0, 0.0};
  double carry[2] = {0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> t = term(i);
    const double parts[2] = {t.real(), t.imag()};
    for (int k = 0; k < 2; ++k) {
      const double next = sum[k] + parts[k];
      carry[k] += std::abs(sum[k]) >= std::abs(parts[k]) ? (sum[k] - next) + parts[k]
                                                         : (parts[k] - next) + sum[k];
      sum[k] = next;
    }
  }
  return {sum[0] + carry[0], sum[1] + carry[1]};
}

}  // namespace

std::complex<double> integrate(const QuadratureMesh& mesh, const Eigen::VectorXcd& samples) {
  if (samples.size() != mesh.size()) throw std::invalid_argument("integrate: size mismatch");
  return compensated_sum(mesh.size(), [&](Eigen::Index i) { return mesh.weights(i) * samples(i); });
}

std::complex<double> integrate(const QuadratureMesh& mesh, const ComplexField& f) {
  return integrate(mesh, sample(mesh, f));
}

std::complex<double> inner_product(const QuadratureMesh& mesh, const Eigen::VectorXcd& f,
                                   const Eigen::VectorXcd& g) {
  if (f.size() != mesh.size() || g.size() != mesh.size()) {
    throw std::invalid_argument("inner_product: size mismatch");
  }
  return compensated_sum(mesh.size(),
                         [&](Eigen::Index i) { return mesh.weights(i) * f(i) * std::conj(g(i)); });
}

std::complex<double> inner_product(const QuadratureMesh& mesh, const ComplexField& f,
                                   const ComplexField& g) {
  return inner_product(mesh, sample(mesh, f), sample(mesh, g));
}

double l2_norm(const QuadratureMesh& mesh, const Eigen::VectorXcd& f) {
  return std::sqrt(std::max(0.0, inner_product(mesh, f, f).real()));
}

double l2_norm(const QuadratureMesh& mesh, const ComplexField& f) {
  return l2_norm(mesh, sample(mesh, f));
}

}  // namespace cauchylab
