#ifndef CAUCHYLAB_FOURIER_HPP
#define CAUCHYLAB_FOURIER_HPP

#include <functional>

namespace cauchylab {

/// Radial function on support_inner <= rho <= support_outer, zero outside.
struct RadialProfile {
  std::function<double(double)> evaluator;
  double support_outer = 1.0;
  double support_inner = 0.0;

  static RadialProfile indicator(double radius = 1.0);
  double operator()(double rho) const;
};

struct FourierOptions {
  /// Truncation point S of the s-integral.
  double cutoff = 200.0;
  /// Multiplies every panel length (0.5 halves the panels).
  double panel_scale = 1.0;
  int panel_order = 16;
};

/// Radial Fourier transform with the 1/(2 pi) convention,
/// f^(s) = int f(rho) J0(s rho) rho d(rho), by Gauss panels of length at
/// most pi / (2 s) in rho.
double hankel_hat(const RadialProfile& profile, double s, const FourierOptions& options = {});

struct TruncatedIntegral {
  double value = 0.0;       // truncated part plus tail
  double truncated = 0.0;   // int_0^S
  double tail = 0.0;        // int_S^infinity from the fitted envelope
  double error_estimate = 0.0;
};

/// int_0^infinity g(s) ds for g with envelope C s^{-decay_power} that
/// oscillates with period at most pi / support_radius.  Panels are aligned
/// to that period; C is the mean of s^p g(s) over a whole number of periods
/// below S.  The error estimate adds the spread between the fits on the top
/// two octaves to a bound on the oscillating part of the tail.
TruncatedIntegral integrate_to_infinity(const std::function<double(double)>& g,
                                        double support_radius, double decay_power,
                                        const FourierOptions& options = {});

/// int |f^(xi)|^2 / |xi| d(xi) over the plane = 2 pi int_0^infinity f^(s)^2 ds.
/// Throws std::runtime_error when the error estimate exceeds tol.
TruncatedIntegral weighted_form_radial(const RadialProfile& profile, double tol = 1e-5,
                                       const FourierOptions& options = {});

/// 2 pi int_0^infinity f^(s)^2 s ds, which Plancherel equates with ||f||^2.
TruncatedIntegral plancherel_norm_sq(const RadialProfile& profile,
                                     const FourierOptions& options = {});

/// int_0^infinity J1(r)^2 / r^2 dr, from the closed-form integrand.
TruncatedIntegral bessel_j1_squared_over_r2(const FourierOptions& options = {});

struct CounterexampleReport {
  double lhs = 0.0;  // weighted form of the unit-disk indicator
  double lhs_error_estimate = 0.0;
  double rhs = 0.0;  // lambda1^{-1/2} ||1||^2 = pi / j01
  double j01 = 0.0;
  bool verdict = false;  // lhs > rhs
};

CounterexampleReport counterexample();

}  // namespace cauchylab

#endif  // CAUCHYLAB_FOURIER_HPP
