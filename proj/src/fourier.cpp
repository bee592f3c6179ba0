#include "cauchylab/fourier.hpp"

#include "cauchylab/quadrature.hpp"
#include "cauchylab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchylab {

using std::numbers::pi;

namespace {

// Gauss sum of g over [a, b] split into panels of length at most h.
template <typename F>
double panel_sum(const F& g, double a, double b, double h, int order) {
  if (!(b > a)) return 0.0;
  const auto& ref = cached_gauss_legendre(order);
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / h - 1e-12)));
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    double part = 0.0;
    for (Eigen::Index q = 0; q < ref.nodes.size(); ++q) {
      part += ref.weights(q) * g(lo + 0.5 * width * (ref.nodes(q) + 1.0));
    }
    sum += 0.5 * width * part;
  }
  return sum;
}

void check_options(const FourierOptions& options) {
  if (!(options.cutoff > 0.0) || !(options.panel_scale > 0.0) || options.panel_order < 2) {
    throw std::invalid_argument("fourier: invalid options");
  }
}

}  // namespace

RadialProfile RadialProfile::indicator(double radius) {
  return {[](double) { return 1.0; }, radius, 0.0};
}

double RadialProfile::operator()(double rho) const {
  if (rho < support_inner || rho > support_outer || !evaluator) return 0.0;
  return evaluator(rho);
}

double hankel_hat(const RadialProfile& profile, double s, const FourierOptions& options) {
  check_options(options);
  if (!std::isfinite(s)) throw std::domain_error("hankel_hat: s must be finite");
  const double a = profile.support_inner;
  const double b = profile.support_outer;
  const double s_abs = std::abs(s);
  double h = b - a;
  if (s_abs > 1.0) h = std::min(h, pi / (2.0 * s_abs));
  h *= options.panel_scale;
  return panel_sum([&](double rho) { return profile.evaluator(rho) * bessel_j(0, s_abs * rho) * rho; },
                   a, b, h, options.panel_order);
}

TruncatedIntegral integrate_to_infinity(const std::function<double(double)>& g,
                                        double support_radius, double decay_power,
                                        const FourierOptions& options) {
  check_options(options);
  if (!(support_radius > 0.0) || !(decay_power > 1.0)) {
    throw std::invalid_argument("integrate_to_infinity: need support_radius > 0 and decay_power > 1");
  }
  const double cutoff = options.cutoff;
  const double period = pi / support_radius;
  const double h = 0.5 * period * options.panel_scale;

  TruncatedIntegral result;
  result.truncated = panel_sum(g, 0.0, cutoff, h, options.panel_order);

  // Mean of s^p g(s) over a whole number of periods ending at hi.
  auto envelope = [&](double hi) {
    const double periods = std::max(1.0, std::floor(0.5 * hi / period));
    const double lo = hi - periods * period;
    const double integral = panel_sum(
        [&](double s) { return std::pow(s, decay_power) * g(s); }, lo, hi, h, options.panel_order);
    return integral / (hi - lo);
  };
  const double top = envelope(cutoff);
  const double below = envelope(0.5 * cutoff);
  const double scale = std::pow(cutoff, 1.0 - decay_power) / (decay_power - 1.0);
  result.tail = top * scale;
  // The oscillating part of the tail integrates to at most the envelope at S
  // times a half period over pi.
  const double oscillation = std::abs(top) * std::pow(cutoff, -decay_power) * period / (2.0 * pi);
  result.error_estimate = std::abs(top - below) * scale + oscillation;
  result.value = result.truncated + result.tail;
  return result;
}

TruncatedIntegral weighted_form_radial(const RadialProfile& profile, double tol,
                                       const FourierOptions& options) {
  const auto f_hat = [&](double s) {
    const double v = hankel_hat(profile, s, options);
    return v * v;
  };
  TruncatedIntegral r = integrate_to_infinity(f_hat, profile.support_outer, 3.0, options);
  r.value *= 2.0 * pi;
  r.truncated *= 2.0 * pi;
  r.tail *= 2.0 * pi;
  r.error_estimate *= 2.0 * pi;
  if (r.error_estimate > tol) {
    throw std::runtime_error("weighted_form_radial: tail estimate exceeds tolerance");
  }
  return r;
}

TruncatedIntegral plancherel_norm_sq(const RadialProfile& profile, const FourierOptions& options) {
  const auto g = [&](double s) {
    const double v = hankel_hat(profile, s, options);
    return v * v * s;
  };
  TruncatedIntegral r = integrate_to_infinity(g, profile.support_outer, 2.0, options);
  r.value *= 2.0 * pi;
  r.truncated *= 2.0 * pi;
  r.tail *= 2.0 * pi;
  r.error_estimate *= 2.0 * pi;
  return r;
}

TruncatedIntegral bessel_j1_squared_over_r2(const FourierOptions& options) {
  const auto g = [](double r) {
    if (r < 1e-8) return 0.25;
    const double v = bessel_j(1, r) / r;
    return v * v;
  };
  return integrate_to_infinity(g, 1.0, 3.0, options);
}

CounterexampleReport counterexample() {
  CounterexampleReport report;
  const TruncatedIntegral lhs = weighted_form_radial(RadialProfile::indicator(1.0));
  report.lhs = lhs.value;
  report.lhs_error_estimate = lhs.error_estimate;
  report.j01 = bessel_j0_first_zero();
  report.rhs = pi / report.j01;
  report.verdict = report.lhs > report.rhs;
  return report;
}

}  // namespace cauchylab
