#pragma once

// Mean-square fluctuations of the mirror quadratures, obtained by integrating
// the symmetrised spectra over a declared frequency window [−Ω_max, Ω_max].

#include <vector>

#include "optosq/features.hpp"
#include "optosq/spectra.hpp"

namespace optosq {

struct CutoffSpec {
  double omega_max_over_omega_m = 20.0;
  double rel_tol = 1e-6;
};

struct VarianceDiagnostics {
  double omega_max = 0.0;            // rad/s
  double value_at_double_cutoff = 0.0;
  double doubling_delta = 0.0;       // relative change from Ω_max to 2Ω_max
  double quadrature_error = 0.0;     // relative
  std::size_t evaluations = 0;
};

struct VarianceResult {
  double value = 0.0;
  VarianceDiagnostics diagnostics;
};

/// Knots for the adaptive integrator: resonances of the drift matrix, the
/// squeezing carrier and its side modes, and the frequencies where the
/// two-photon partner terms resonate, each fanned out over a few linewidths.
std::vector<double> spectral_knots(const SteadyState& ss, const SystemParams& params,
                                   const SqueezeSource& src, double omega_max);

/// (1/2π) ∫ S(ω) dω over [−Ω_max, Ω_max]. Refuses unstable steady states.
VarianceResult variance(Quadrature which, const SteadyState& ss, const SystemParams& params,
                        const SqueezeSource& src, const CutoffSpec& cutoff = {},
                        const Conventions& conv = {});

struct MomentReport {
  double var_q = 0.0;
  double var_p = 0.0;
  double uncertainty_product = 0.0;
  bool squeezed_q = false;  // var_q < 1/2
  bool squeezed_p = false;  // var_p < 1/2
  double omega_max = 0.0;   // rad/s
  double omega_max_over_omega_m = 0.0;
  double last_doubling_delta_q = 0.0;
  double last_doubling_delta_p = 0.0;
  double quadrature_error_estimate = 0.0;
};

MomentReport squeezing_report(const SteadyState& ss, const SystemParams& params,
                              const SqueezeSource& src, const CutoffSpec& cutoff = {},
                              const Conventions& conv = {});

}  // namespace optosq
