#ifndef CAUCHYLAB_QUADRATURE_HPP
#define CAUCHYLAB_QUADRATURE_HPP

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace cauchylab {

template <typename Scalar>
struct GaussRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
/// Newton iteration on the three-term recurrence.
template <typename Scalar = double>
GaussRule<Scalar> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussRule<Scalar> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
    Scalar dp = 0;
    for (int it = 0; it < 100; ++it) {
      Scalar p0 = 1;
      Scalar p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Scalar dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 2 * eps) {
        // one more pass for the derivative at the converged node
        p0 = 1;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        break;
      }
    }
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) rule.nodes((n - 1) / 2) = 0;
  return rule;
}

/// Affine image of a rule on [-1, 1] onto [a, b].
template <typename Scalar>
GaussRule<Scalar> map_rule(const GaussRule<Scalar>& ref, Scalar a, Scalar b) {
  const Scalar half = (b - a) / 2;
  const Scalar mid = (a + b) / 2;
  GaussRule<Scalar> out;
  out.nodes = (ref.nodes.array() * half + mid).matrix();
  out.weights = ref.weights * half;
  return out;
}

/// Process-wide cached rule for small fixed orders used in inner loops.
const GaussRule<double>& cached_gauss_legendre(int n);

struct AdaptiveResult {
  std::complex<double> value;
  double error;
  int intervals;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of a complex
/// integrand on [a, b].  Bisects the interval with the largest error until
/// the summed error estimate is below abs_tol.  Throws std::runtime_error
/// when max_intervals is exhausted first.
AdaptiveResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double abs_tol, int max_intervals = 4000);

}  // namespace cauchylab

#endif  // CAUCHYLAB_QUADRATURE_HPP
