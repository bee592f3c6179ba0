#ifndef CAUCHYLAB_SPECFUN_HPP
#define CAUCHYLAB_SPECFUN_HPP

#include <functional>
#include <optional>

namespace cauchylab {

/// Bessel function of the first kind, orders 0 and 1.
///
/// Ascending series (evaluated in extended precision) below the switch
/// point, Hankel asymptotic expansion above it.  Absolute accuracy is
/// better than 1e-12 on [0, 200].  Negative arguments use parity.
double bessel_j(int order, double x);

/// Bessel function of the second kind, orders 0 and 1, for x > 0.
double bessel_y(int order, double x);

/// Complete elliptic integral of the first kind, K(m) with m = k^2,
/// computed by the arithmetic-geometric mean.  Requires 0 <= m < 1.
double elliptic_k(double m);

/// First positive zero of J0.
double bessel_j0_first_zero();

/// Argument above which the Bessel routines switch to the asymptotic form.
inline constexpr double kBesselAsymptoticSwitch = 17.0;

struct RootBracket {
  double lo;
  double hi;
  double tol;  // absolute, on the abscissa
};

/// Root of f inside a sign-changing bracket: bisection with a safeguarded
/// secant step.  Throws std::domain_error when f(lo) and f(hi) share a sign
/// and std::runtime_error if the 200-iteration cap is hit.
double bracketed_root(const std::function<double(double)>& f, RootBracket bracket);

/// First sub-interval [x, x + step] of (a, b] on which f changes sign.
std::optional<RootBracket> scan_for_sign_change(const std::function<double(double)>& f,
                                                double a, double b, double step, double tol);

namespace detail {
// The two Bessel branches, exposed for the overlap test.
double bessel_j_series(int order, double x);
double bessel_j_asymptotic(int order, double x);
double bessel_y_series(int order, double x);
double bessel_y_asymptotic(int order, double x);
}  // namespace detail

}  // namespace cauchylab

#endif  // CAUCHYLAB_SPECFUN_HPP
