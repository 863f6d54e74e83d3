#include "optosq/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "optosq/constants.hpp"
#include "optosq/errors.hpp"
#include "optosq/quadrature.hpp"

namespace optosq {

std::vector<double> spectral_knots(const SteadyState& ss, const SystemParams& params,
                                   const SqueezeSource& src, double omega_max) {
  struct Line {
    double center, width;
  };
  std::vector<Line> lines;
  const auto stab = check_stability(drift_matrix(ss, params));
  const double ws = src.carrier();
  for (std::size_t i = 0; i < 4; ++i) {
    const double wn = std::abs(stab.eigen_imag_parts[i]);
    const double width = std::abs(stab.eigen_real_parts[i]);
    for (double c : {wn, 2.0 * ws + wn, 2.0 * ws - wn}) lines.push_back({c, width});
  }
  lines.push_back({params.mech_freq, params.mech_damping});
  if (src.kind() == SqueezeKind::dpo || src.kind() == SqueezeKind::ndpo) {
    for (double c : {ws, ws + src.alpha(), ws - src.alpha()}) {
      lines.push_back({c, src.mu()});
      lines.push_back({c, src.lambda()});
    }
  }

  std::vector<double> knots{-omega_max, 0.0, omega_max};
  for (const auto& l : lines) {
    if (!(l.width > 0.0)) {
      knots.push_back(l.center);
      knots.push_back(-l.center);
      continue;
    }
    for (double k : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
      for (double s : {-1.0, 1.0}) {
        const double w = l.center + s * k * l.width;
        knots.push_back(w);
        knots.push_back(-w);
      }
    }
  }
  std::erase_if(knots, [&](double w) { return !(std::abs(w) <= omega_max); });
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

VarianceResult variance(Quadrature which, const SteadyState& ss, const SystemParams& params,
                        const SqueezeSource& src, const CutoffSpec& cutoff,
                        const Conventions& conv) {
  if (!(cutoff.omega_max_over_omega_m > 0.0) || !(cutoff.rel_tol > 0.0)) {
    throw ConfigError("cutoff: omega_max and rel_tol must be positive");
  }
  const auto stab = check_stability(drift_matrix(ss, params));
  if (!stab.stable) {
    std::ostringstream os;
    os << "variance requires a stable steady state; largest eigenvalue real part = "
       << stab.eigen_real_parts[3] << " rad/s";
    throw InstabilityError(os.str());
  }

  const SpectrumModel model(ss, params, src, conv);
  const double wm = params.mech_freq;
  const double omega_max = cutoff.omega_max_over_omega_m * wm;
  // Integrate in units of ω/ω_m to keep the integrand O(1)-scaled.
  auto integrand = [&](double x) {
    const auto pt = model.at(x * wm);
    return (which == Quadrature::q ? pt.s_q : pt.s_p) * wm;
  };

  auto knots = spectral_knots(ss, params, src, omega_max);
  for (auto& k : knots) k /= wm;
  const auto core = integrate_adaptive(integrand, knots, cutoff.rel_tol);
  if (!core.converged) {
    throw ConvergenceError("variance quadrature did not converge", core.abs_error / std::abs(core.value));
  }

  const double x_max = cutoff.omega_max_over_omega_m;
  const std::array<double, 2> upper{x_max, 2.0 * x_max};
  const std::array<double, 2> lower{-2.0 * x_max, -x_max};
  const double tol_abs = cutoff.rel_tol * std::abs(core.value);
  const auto tail_hi = integrate_adaptive(integrand, upper, cutoff.rel_tol, tol_abs);
  const auto tail_lo = integrate_adaptive(integrand, lower, cutoff.rel_tol, tol_abs);

  const double norm = 1.0 / constants::two_pi;
  VarianceResult r;
  r.value = core.value * norm;
  auto& d = r.diagnostics;
  d.omega_max = omega_max;
  d.value_at_double_cutoff = (core.value + tail_hi.value + tail_lo.value) * norm;
  d.doubling_delta = std::abs(d.value_at_double_cutoff - r.value) / std::abs(r.value);
  d.quadrature_error = core.abs_error / std::abs(core.value);
  d.evaluations = core.evaluations + tail_hi.evaluations + tail_lo.evaluations;
  return r;
}

MomentReport squeezing_report(const SteadyState& ss, const SystemParams& params,
                              const SqueezeSource& src, const CutoffSpec& cutoff,
                              const Conventions& conv) {
  const auto q = variance(Quadrature::q, ss, params, src, cutoff, conv);
  const auto p = variance(Quadrature::p, ss, params, src, cutoff, conv);
  MomentReport rep;
  rep.var_q = q.value;
  rep.var_p = p.value;
  rep.uncertainty_product = q.value * p.value;
  rep.squeezed_q = q.value < 0.5;
  rep.squeezed_p = p.value < 0.5;
  rep.omega_max = q.diagnostics.omega_max;
  rep.omega_max_over_omega_m = cutoff.omega_max_over_omega_m;
  rep.last_doubling_delta_q = q.diagnostics.doubling_delta;
  rep.last_doubling_delta_p = p.diagnostics.doubling_delta;
  rep.quadrature_error_estimate = std::max(q.diagnostics.quadrature_error, p.diagnostics.quadrature_error);
  return rep;
}

}  // namespace optosq
