#include "cauchylab/quadrature.hpp"

#include <array>
#include <map>
#include <mutex>
#include <queue>
#include <vector>

namespace cauchylab {
namespace {

// Kronrod 15-point abscissae (non-negative half); odd indices are the
// embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  std::complex<double> value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const std::function<std::complex<double>(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(mid);
  std::complex<double> kronrod = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const std::complex<double> sum = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

const GaussRule<double>& cached_gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule<double>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre<double>(n)).first;
  return it->second;
}

AdaptiveResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double abs_tol, int max_intervals) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Panel> panels;
  panels.push(kronrod_panel(f, a, b));
  std::complex<double> total = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > abs_tol) {
    if (count >= max_intervals) {
      throw std::runtime_error("integrate_adaptive: interval budget exhausted");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = kronrod_panel(f, worst.a, mid);
    Panel right = kronrod_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    // Drift in the running sums is cheap to remove occasionally.
    if (count % 64 == 0) {
      std::vector<Panel> all;
      all.reserve(panels.size());
      total = 0.0;
      error = 0.0;
      while (!panels.empty()) {
        all.push_back(panels.top());
        total += all.back().value;
        error += all.back().error;
        panels.pop();
      }
      for (auto& p : all) panels.push(p);
    }
  }
  return {total, error, count};
}

}  // namespace cauchylab
