#include "cauchylab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cauchylab {
namespace {

using std::numbers::pi;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

void check_order(int order) {
  if (order != 0 && order != 1) {
    throw std::domain_error("bessel: unsupported order " + std::to_string(order));
  }
}

// sum_m (-1)^m (x/2)^(2m+k) / (m! (m+k)!)
long double j_series(int order, long double x) {
  const long double q = -0.25L * x * x;
  long double term = order == 0 ? 1.0L : 0.5L * x;
  long double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<long double>(m) * static_cast<long double>(m + order));
    sum += term;
    if (std::fabs(term) < 1e-24L) break;
  }
  return sum;
}

// Y0(x) = (2/pi)(ln(x/2) + gamma) J0(x) + (2/pi) sum_{m>=1} (-1)^{m+1} H_m (x^2/4)^m / (m!)^2
long double y0_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L;  // (x^2/4)^m / (m!)^2 without sign
  long double harmonic = 0.0L;
  long double sum = 0.0L;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<long double>(m) * static_cast<long double>(m));
    harmonic += 1.0L / static_cast<long double>(m);
    const long double t = (m % 2 == 1 ? 1.0L : -1.0L) * harmonic * term;
    sum += t;
    if (std::fabs(t) < 1e-24L) break;
  }
  const long double two_over_pi = 2.0L / std::numbers::pi_v<long double>;
  return two_over_pi * ((std::log(0.5L * x) + kEulerGamma) * j_series(0, x) + sum);
}

// Y1(x) = -2/(pi x) + (2/pi) ln(x/2) J1(x)
//         - (1/pi) sum_{k>=0} (-1)^k (psi(k+1) + psi(k+2)) (x/2)^{2k+1} / (k! (k+1)!)
long double y1_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 0.5L * x;
  long double psi_k1 = -kEulerGamma;         // psi(1)
  long double psi_k2 = 1.0L - kEulerGamma;   // psi(2)
  long double sum = (psi_k1 + psi_k2) * term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * static_cast<long double>(k + 1));
    psi_k1 += 1.0L / static_cast<long double>(k);
    psi_k2 += 1.0L / static_cast<long double>(k + 1);
    const long double t = (psi_k1 + psi_k2) * term;
    sum += t;
    if (std::fabs(t) < 1e-24L) break;
  }
  const long double pil = std::numbers::pi_v<long double>;
  return -2.0L / (pil * x) + (2.0L / pil) * std::log(0.5L * x) * j_series(1, x) - sum / pil;
}

struct HankelPQ {
  double p;
  double q;
};

// Hankel's P and Q, truncated at the smallest term of the asymptotic series.
HankelPQ hankel_pq(int order, double x) {
  const double mu = 4.0 * order * order;
  const double eightx = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * eightx);
    if (std::fabs(next) >= std::fabs(last) && k > 2) break;
    last = next;
    term = next;
    // a_k / x^k alternates between Q (odd k) and P (even k) with signs (-1)^{floor(k/2)}
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 1) {
      q += sign * term;
    } else {
      p += sign * term;
    }
    if (std::fabs(term) < 1e-17) break;
  }
  return {p, q};
}

}  // namespace

namespace detail {

double bessel_j_series(int order, double x) {
  check_order(order);
  return static_cast<double>(j_series(order, x));
}

double bessel_j_asymptotic(int order, double x) {
  check_order(order);
  const auto [p, q] = hankel_pq(order, x);
  const double chi = x - (0.5 * order + 0.25) * pi;
  return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_y_series(int order, double x) {
  check_order(order);
  return static_cast<double>(order == 0 ? y0_series(x) : y1_series(x));
}

double bessel_y_asymptotic(int order, double x) {
  check_order(order);
  const auto [p, q] = hankel_pq(order, x);
  const double chi = x - (0.5 * order + 0.25) * pi;
  return std::sqrt(2.0 / (pi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

}  // namespace detail

double bessel_j(int order, double x) {
  check_order(order);
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
  if (x < 0.0) {
    const double v = bessel_j(order, -x);
    return order == 0 ? v : -v;
  }
  if (x <= kBesselAsymptoticSwitch) return detail::bessel_j_series(order, x);
  return detail::bessel_j_asymptotic(order, x);
}

double bessel_y(int order, double x) {
  check_order(order);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_y: argument must be finite and positive");
  }
  if (x <= kBesselAsymptoticSwitch) return detail::bessel_y_series(order, x);
  return detail::bessel_y_asymptotic(order, x);
}

double elliptic_k(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("elliptic_k: parameter outside [0, 1)");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::fabs(a - b) >= 1e-16 * a; ++i) {
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return pi / (2.0 * a);
}

double bessel_j0_first_zero() {
  return bracketed_root([](double x) { return bessel_j(0, x); }, {2.0, 3.0, 1e-15});
}

double bracketed_root(const std::function<double(double)>& f, RootBracket bracket) {
  if (!(bracket.lo < bracket.hi) || !(bracket.tol > 0.0)) {
    throw std::domain_error("bracketed_root: invalid bracket");
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw std::domain_error("bracketed_root: no sign change");

  bool use_secant = true;
  for (int it = 0; it < 200; ++it) {
    const double width = hi - lo;
    if (width <= bracket.tol) return 0.5 * (lo + hi);
    double x = 0.5 * (lo + hi);
    if (use_secant) {
      const double secant = lo - flo * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) x = secant;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    // A secant estimate that lands within tol of the root closes the bracket
    // with one probe on its far side.
    if (use_secant && hi - lo > bracket.tol) {
      const double probe = (lo == x) ? x + 0.5 * bracket.tol : x - 0.5 * bracket.tol;
      if (probe > lo && probe < hi) {
        const double fp = f(probe);
        if (fp == 0.0) return probe;
        if ((fp < 0.0) == (flo < 0.0)) {
          lo = probe;
          flo = fp;
        } else {
          hi = probe;
          fhi = fp;
        }
      }
    }
    // Secant only while it at least halves the bracket.
    use_secant = (hi - lo) <= 0.5 * width;
  }
  throw std::runtime_error("bracketed_root: iteration cap reached");
}

std::optional<RootBracket> scan_for_sign_change(const std::function<double(double)>& f,
                                                double a, double b, double step, double tol) {
  if (!(step > 0.0) || !(a < b)) throw std::domain_error("scan_for_sign_change: invalid scan");
  double x0 = a + step;
  double f0 = f(x0);
  for (double x1 = x0 + step; x1 <= b + 0.5 * step; x1 += step) {
    const double f1 = f(x1);
    if ((f0 < 0.0) != (f1 < 0.0) || f1 == 0.0) return RootBracket{x0, x1, tol};
    x0 = x1;
    f0 = f1;
  }
  return std::nullopt;
}

}  // namespace cauchylab
