#pragma once

// Stationary correlation spectra of the noise inputs: the mirror's thermal
// bath and the squeezed vacuum injected through the input port.

#include <complex>
#include <utility>

#include "optosq/core_model.hpp"

namespace optosq {

enum class SqueezeKind { vacuum, dpo, ndpo, broadband };

const char* to_string(SqueezeKind k);

/// (λ, μ) = (κ_p/2 + ε, κ_p/2 − ε). Throws above the parametric threshold.
std::pair<double, double> pump_rates(double kappa_p, double eps);

/// Effective pump amplitude ε = √r κ_p/2 for pump power ratio r = P/P_c of the
/// parametric oscillator.
double epsilon_from_power_ratio(double ratio, double kappa_p);

/// Immutable description of the injected field. All validation happens in the
/// factories, so evaluation never throws.
///
/// The squeezing carrier is given in the laser rotating frame, i.e. as the
/// offset ω̃_s = ω_s − ω_c (normally ω_m).
class SqueezeSource {
 public:
  static SqueezeSource vacuum();
  static SqueezeSource dpo(double kappa_p, double eps, double phi0, double carrier);
  static SqueezeSource ndpo(double kappa_p, double eps, double phi0, double alpha, double carrier);
  /// Frequency-independent N = n, M = m e^{iφ₀}; requires |m| ≤ √(n(n+1)).
  static SqueezeSource broadband(double n, double m, double phi0, double carrier);

  SqueezeSource() = default;  // vacuum

  SqueezeKind kind() const { return kind_; }
  double kappa_p() const { return kappa_p_; }
  double eps() const { return eps_; }
  double phi0() const { return phi0_; }
  double alpha() const { return alpha_; }
  double carrier() const { return carrier_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double broadband_n() const { return n_bb_; }
  double broadband_m() const { return m_bb_; }

  friend bool operator==(const SqueezeSource&, const SqueezeSource&) = default;

 private:
  SqueezeKind kind_ = SqueezeKind::vacuum;
  double kappa_p_ = 0.0, eps_ = 0.0, phi0_ = 0.0, alpha_ = 0.0, carrier_ = 0.0;
  double lambda_ = 0.0, mu_ = 0.0;
  double n_bb_ = 0.0, m_bb_ = 0.0;
  std::complex<double> phase_{1.0, 0.0};

  friend struct SqueezeSpectrumPoint squeeze_spectrum(const SqueezeSource& src, double omega);
};

struct SqueezeSpectrumPoint {
  double n = 0.0;             // photon-number spectrum N(ω)
  std::complex<double> m{};   // two-photon correlation M(ω)
  double omega = 0.0;
};

SqueezeSpectrumPoint squeeze_spectrum(const SqueezeSource& src, double omega);

/// γ_m (ω/ω_m) coth(ħω / 2k_B T), continuous at ω = 0 and reducing to
/// γ_m|ω|/ω_m at T = 0.
double thermal_kernel(double omega, const SystemParams& params);

}  // namespace optosq
