#include "optosq/quadrature.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace optosq {

namespace {

// QUADPACK qk15 abscissae and weights.
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
  double a, b, value, error;
  double floor;  // roundoff level of this panel; `error` never drops below it
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double magnitude = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double lo = f(center - dx), hi = f(center + dx);
    kronrod += kWgk[j] * (lo + hi);
    magnitude += kWgk[j] * (std::abs(lo) + std::abs(hi));
    if (j % 2 == 1) gauss += kWg[j / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(half) * magnitude;
  return {a, b, kronrod, std::max(std::abs(kronrod - gauss), floor), floor};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> knots, double rel_tol,
                                    double abs_tol, std::size_t max_intervals) {
  QuadratureResult res;
  std::priority_queue<Panel> heap;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i + 1] > knots[i])) continue;
    Panel p = gauss_kronrod(f, knots[i], knots[i + 1]);
    res.evaluations += 15;
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  auto done = [&] { return error <= std::max(abs_tol, rel_tol * std::abs(value)); };
  while (!heap.empty() && !done() && heap.size() < max_intervals) {
    const Panel worst = heap.top();
    if (worst.error <= worst.floor) break;  // the largest error is already roundoff
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at floating-point resolution
    heap.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    res.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running totals.
  value = 0.0;
  error = 0.0;
  res.intervals = heap.size();
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  res.value = value;
  res.abs_error = error;
  res.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
  return res;
}

}  // namespace optosq
