#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace optosq {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration over consecutive
/// panels [knots[i], knots[i+1]]. The panel with the largest error estimate is
/// bisected until the summed estimate drops below max(abs_tol, rel_tol·|I|).
/// Never throws; check `converged`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> knots, double rel_tol,
                                    double abs_tol = 0.0, std::size_t max_intervals = 200000);

}  // namespace optosq
