#include "optosq/noise.hpp"

#include <cmath>
#include <string>

#include "optosq/constants.hpp"
#include "optosq/errors.hpp"

namespace optosq {

const char* to_string(SqueezeKind k) {
  switch (k) {
    case SqueezeKind::vacuum: return "vacuum";
    case SqueezeKind::dpo: return "dpo";
    case SqueezeKind::ndpo: return "ndpo";
    case SqueezeKind::broadband: return "broadband";
  }
  return "unknown";
}

std::pair<double, double> pump_rates(double kappa_p, double eps) {
  if (!std::isfinite(kappa_p) || kappa_p <= 0.0) {
    throw InvalidParameter("kappa_p", "must be finite and strictly positive");
  }
  if (!std::isfinite(eps) || eps < 0.0) {
    throw InvalidParameter("epsilon", "must be finite and non-negative");
  }
  if (eps >= 0.5 * kappa_p) {
    throw InvalidParameter(
        "epsilon", "at or above the parametric threshold (eps >= kappa_p/2); the linearised "
                   "source spectra are only valid sufficiently below threshold");
  }
  return {0.5 * kappa_p + eps, 0.5 * kappa_p - eps};
}

double epsilon_from_power_ratio(double ratio, double kappa_p) {
  if (!std::isfinite(ratio) || ratio < 0.0) {
    throw InvalidParameter("power_ratio", "must be finite and non-negative");
  }
  if (ratio >= 1.0) {
    throw InvalidParameter("power_ratio", "parametric oscillator at or above threshold (r >= 1)");
  }
  if (!std::isfinite(kappa_p) || kappa_p <= 0.0) {
    throw InvalidParameter("kappa_p", "must be finite and strictly positive");
  }
  return std::sqrt(ratio) * kappa_p / 2.0;
}

namespace {

void check_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw InvalidParameter(field, "must be finite");
}

}  // namespace

SqueezeSource SqueezeSource::vacuum() { return SqueezeSource{}; }

SqueezeSource SqueezeSource::dpo(double kappa_p, double eps, double phi0, double carrier) {
  check_finite(phi0, "phi0");
  check_finite(carrier, "carrier_offset");
  const auto [lam, mu] = pump_rates(kappa_p, eps);
  SqueezeSource s = vacuum();
  s.kind_ = SqueezeKind::dpo;
  s.kappa_p_ = kappa_p;
  s.eps_ = eps;
  s.phi0_ = phi0;
  s.carrier_ = carrier;
  s.lambda_ = lam;
  s.mu_ = mu;
  s.phase_ = std::polar(1.0, phi0);
  return s;
}

SqueezeSource SqueezeSource::ndpo(double kappa_p, double eps, double phi0, double alpha,
                                  double carrier) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidParameter("alpha", "must be finite and non-negative");
  }
  SqueezeSource s = dpo(kappa_p, eps, phi0, carrier);
  s.kind_ = SqueezeKind::ndpo;
  s.alpha_ = alpha;
  return s;
}

SqueezeSource SqueezeSource::broadband(double n, double m, double phi0, double carrier) {
  check_finite(phi0, "phi0");
  check_finite(carrier, "carrier_offset");
  if (!std::isfinite(n) || n < 0.0) {
    throw InvalidParameter("broadband_n", "must be finite and non-negative");
  }
  if (!std::isfinite(m) || std::abs(m) > std::sqrt(n * (n + 1.0))) {
    throw InvalidParameter("broadband_m", "violates |M| <= sqrt(N(N+1))");
  }
  SqueezeSource s = vacuum();
  s.kind_ = SqueezeKind::broadband;
  s.phi0_ = phi0;
  s.carrier_ = carrier;
  s.n_bb_ = n;
  s.m_bb_ = m;
  s.phase_ = std::polar(1.0, phi0);
  return s;
}

SqueezeSpectrumPoint squeeze_spectrum(const SqueezeSource& s, double omega) {
  SqueezeSpectrumPoint pt;
  pt.omega = omega;
  switch (s.kind_) {
    case SqueezeKind::vacuum:
      break;
    case SqueezeKind::broadband:
      pt.n = s.n_bb_;
      pt.m = s.m_bb_ * s.phase_;
      break;
    case SqueezeKind::dpo: {
      const double x = omega - s.carrier_;
      const double l2 = s.lambda_ * s.lambda_;
      const double m2 = s.mu_ * s.mu_;
      const double a_mu = 1.0 / (x * x + m2);
      const double a_lam = 1.0 / (x * x + l2);
      const double pre = (l2 - m2) / 4.0;
      pt.n = pre * (a_mu - a_lam);
      pt.m = s.phase_ * (pre * (a_mu + a_lam));
      break;
    }
    case SqueezeKind::ndpo: {
      const double x1 = omega - s.carrier_ - s.alpha_;
      const double x2 = omega - s.carrier_ + s.alpha_;
      const double l2 = s.lambda_ * s.lambda_;
      const double m2 = s.mu_ * s.mu_;
      const double a_mu = 1.0 / (x1 * x1 + m2) + 1.0 / (x2 * x2 + m2);
      const double a_lam = 1.0 / (x1 * x1 + l2) + 1.0 / (x2 * x2 + l2);
      const double pre = (l2 - m2) / 8.0;
      pt.n = pre * (a_mu - a_lam);
      pt.m = s.phase_ * (pre * (a_mu + a_lam));
      break;
    }
  }
  return pt;
}

double thermal_kernel(double omega, const SystemParams& params) {
  using namespace constants;
  const double rate = params.mech_damping / params.mech_freq;
  const double t = params.temperature;
  if (t <= 0.0) return rate * std::abs(omega);
  const double x = hbar * omega / (2.0 * k_B * t);
  if (std::abs(x) < 1e-4) {
    // ω coth(x) = (2k_BT/ħ) x coth(x), with x coth(x) = 1 + x²/3 − x⁴/45 + ...
    const double x2 = x * x;
    return rate * (2.0 * k_B * t / hbar) * (1.0 + x2 / 3.0 - x2 * x2 / 45.0);
  }
  return rate * omega / std::tanh(x);
}

}  // namespace optosq
