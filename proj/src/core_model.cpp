#include "optosq/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "optosq/constants.hpp"
#include "optosq/errors.hpp"

namespace optosq {

const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::config: return "config";
    case ErrorCategory::instability: return "instability";
    case ErrorCategory::convergence: return "convergence";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

namespace {

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw InvalidParameter(field, "must be finite and strictly positive, got " + std::to_string(v));
  }
}

void require_nonnegative(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidParameter(field, "must be finite and non-negative, got " + std::to_string(v));
  }
}

}  // namespace

void SystemParams::validate() const {
  require_positive(cavity_length, "cavity_length");
  require_positive(mirror_mass, "mirror_mass");
  require_positive(mech_freq, "mech_freq");
  require_nonnegative(mech_damping, "mech_damping");
  require_positive(cavity_decay, "cavity_decay");
  require_positive(laser_wavelength, "laser_wavelength");
  require_nonnegative(laser_power, "laser_power");
  require_nonnegative(temperature, "temperature");
  if (!std::isfinite(detuning.value)) {
    throw InvalidParameter("detuning", "must be finite");
  }
}

DerivedParams derive(const SystemParams& params) {
  params.validate();
  using namespace constants;
  DerivedParams d;
  d.omega_c = two_pi * c / params.laser_wavelength;
  d.g0 = (d.omega_c / params.cavity_length) *
         std::sqrt(hbar / (2.0 * params.mirror_mass * params.mech_freq));
  d.eps_c = std::sqrt(2.0 * params.cavity_decay * params.laser_power / (hbar * d.omega_c));
  d.quality = params.mech_damping > 0.0 ? params.mech_freq / params.mech_damping
                                        : std::numeric_limits<double>::infinity();
  return d;
}

namespace {

// Steady state expressed through z = (g₀²/ω_m)|a_s|², the radiation-pressure
// detuning shift: z[κ² + (Δ₀ − z)²] = (g₀²/ω_m) ε_c².
double shift_cubic(double z, double delta0, double kappa, double rhs) {
  const double dz = delta0 - z;
  return z * (kappa * kappa + dz * dz) - rhs;
}

double bisect_root(double lo, double hi, double delta0, double kappa, double rhs) {
  double flo = shift_cubic(lo, delta0, kappa, rhs);
  for (int i = 0; i < 400 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = shift_cubic(mid, delta0, kappa, rhs);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> shift_roots(double delta0, double kappa, double rhs) {
  if (rhs == 0.0) return {0.0};
  // Any root satisfies z κ² ≤ rhs, and none is negative.
  const double upper = rhs / (kappa * kappa);
  std::vector<double> knots{0.0, upper};
  const double disc = delta0 * delta0 - 3.0 * kappa * kappa;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    for (double zc : {(2.0 * delta0 - s) / 3.0, (2.0 * delta0 + s) / 3.0}) {
      if (zc > 0.0 && zc < upper) knots.push_back(zc);
    }
  }
  std::sort(knots.begin(), knots.end());

  const double scale = rhs;
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const double fa = shift_cubic(a, delta0, kappa, rhs);
    const double fb = shift_cubic(b, delta0, kappa, rhs);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      roots.push_back(bisect_root(a, b, delta0, kappa, rhs));
    } else if (i > 0 && std::abs(fa) <= 1e-12 * scale) {
      roots.push_back(a);  // tangent double root at a turning point
    }
  }
  if (shift_cubic(knots.back(), delta0, kappa, rhs) == 0.0) roots.push_back(knots.back());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double x, double y) { return std::abs(x - y) <= 1e-14 * upper; }),
              roots.end());
  return roots;
}

SteadyState make_state(double photon_number, double delta, const SystemParams& params,
                       const DerivedParams& d) {
  SteadyState ss;
  const double kappa = params.cavity_decay;
  ss.photon_number = photon_number;
  ss.delta_eff = delta;
  ss.a_s = std::complex<double>(kappa, -delta) * d.eps_c / (delta * delta + kappa * kappa);
  ss.q_s = d.g0 / params.mech_freq * photon_number;
  ss.p_s = 0.0;
  ss.delta_bare = delta + d.g0 * ss.q_s;
  ss.g = std::sqrt(2.0) * d.g0 * std::sqrt(photon_number);
  return ss;
}

}  // namespace

SteadyState solve_steady_state(const SystemParams& params, const DerivedParams& d,
                               BranchSelector selector) {
  params.validate();
  const double kappa = params.cavity_decay;

  if (params.detuning.mode == DetuningMode::effective) {
    const double delta = params.detuning.value;
    const double n = d.eps_c * d.eps_c / (delta * delta + kappa * kappa);
    SteadyState ss = make_state(n, delta, params, d);
    const auto stab = check_stability(drift_matrix(ss, params));
    ss.branch.roots = {{n, delta, stab.stable}};
    return ss;
  }

  const double delta0 = params.detuning.value;
  const double shift_per_photon = d.g0 * d.g0 / params.mech_freq;
  const double rhs = shift_per_photon * d.eps_c * d.eps_c;
  const auto shifts = shift_roots(delta0, kappa, rhs);
  if (shifts.empty()) {
    throw ConvergenceError("steady state: no real non-negative root of the bistability cubic",
                           std::numeric_limits<double>::infinity());
  }

  BranchInfo info;
  for (double z : shifts) {
    // The shift form is exact in z; recover |a_s|² from the field equation so
    // that the self-consistency |a_s|²(κ² + Δ²) = ε_c² holds to rounding.
    const double delta = delta0 - z;
    const double n = d.eps_c * d.eps_c / (delta * delta + kappa * kappa);
    const auto stab = check_stability(drift_matrix(std::sqrt(2.0) * d.g0 * std::sqrt(n), delta, params));
    info.roots.push_back({n, delta, stab.stable});
  }
  info.bistable = info.roots.size() > 1;
  switch (selector) {
    case BranchSelector::lowest: info.selected = 0; break;
    case BranchSelector::highest: info.selected = info.roots.size() - 1; break;
    case BranchSelector::middle:
      if (info.roots.size() != 3) {
        throw InvalidParameter("bistable_branch",
                               "middle branch requested but the cubic has " +
                                   std::to_string(info.roots.size()) + " admissible root(s)");
      }
      info.selected = 1;
      break;
  }
  const auto& r = info.roots[info.selected];
  SteadyState ss = make_state(r.photon_number, r.delta_eff, params, d);
  ss.branch = std::move(info);
  return ss;
}

SteadyState solve_steady_state(const SystemParams& params, BranchSelector selector) {
  return solve_steady_state(params, derive(params), selector);
}

SteadyStateResidual steady_state_residual(const SteadyState& ss, const SystemParams& params,
                                          const DerivedParams& d) {
  SteadyStateResidual r;
  const double wm = params.mech_freq;
  const double a2 = std::norm(ss.a_s);
  {
    const double t1 = -wm * ss.q_s;
    const double t2 = d.g0 * a2;
    const double t3 = -params.mech_damping * ss.p_s;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    r.momentum = scale > 0.0 ? std::abs(t1 + t2 + t3) / scale : 0.0;
  }
  {
    const std::complex<double> i(0.0, 1.0);
    const auto t1 = -i * ss.delta_bare * ss.a_s;
    const auto t2 = i * d.g0 * ss.q_s * ss.a_s;
    const std::complex<double> t3 = d.eps_c;
    const auto t4 = -params.cavity_decay * ss.a_s;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4)});
    r.field = scale > 0.0 ? std::abs(t1 + t2 + t3 + t4) / scale : 0.0;
  }
  return r;
}

DriftMatrix drift_matrix(double g, double delta, const SystemParams& params) {
  const double wm = params.mech_freq;
  const double gm = params.mech_damping;
  const double k = params.cavity_decay;
  DriftMatrix m;
  // clang-format off
  m <<  0.0,  wm,   0.0,    0.0,
       -wm,  -gm,   g,      0.0,
        0.0,  0.0, -k,      delta,
        g,    0.0, -delta, -k;
  // clang-format on
  return m;
}

DriftMatrix drift_matrix(const SteadyState& ss, const SystemParams& params) {
  return drift_matrix(ss.g, ss.delta_eff, params);
}

std::array<double, 4> characteristic_polynomial(const DriftMatrix& a) {
  // Faddeev-LeVerrier recursion.
  std::array<double, 4> c{};
  Eigen::Matrix4d mk = Eigen::Matrix4d::Zero();
  double prev = 1.0;
  for (int k = 1; k <= 4; ++k) {
    mk = a * mk + prev * Eigen::Matrix4d::Identity();
    prev = -(a * mk).trace() / k;
    c[k - 1] = prev;
  }
  return c;
}

bool routh_hurwitz_stable(const std::array<double, 4>& c) {
  const auto [a1, a2, a3, a4] = c;
  if (!(a1 > 0.0 && a3 > 0.0 && a4 > 0.0)) return false;
  const double h2 = a1 * a2 - a3;
  if (!(h2 > 0.0)) return false;
  const double h3 = a3 * h2 - a1 * a1 * a4;
  return h3 > 0.0;
}

StabilityReport check_stability(const DriftMatrix& dm) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(dm, false);
  const auto ev = solver.eigenvalues();
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (ev[i].real() != ev[j].real()) return ev[i].real() < ev[j].real();
    return ev[i].imag() < ev[j].imag();
  });
  StabilityReport rep;
  for (std::size_t i = 0; i < 4; ++i) {
    rep.eigen_real_parts[i] = ev[order[i]].real();
    rep.eigen_imag_parts[i] = ev[order[i]].imag();
  }
  rep.stable = rep.eigen_real_parts[3] < 0.0;
  rep.routh_hurwitz_stable = routh_hurwitz_stable(characteristic_polynomial(dm));
  return rep;
}

double coupling_at_power(double power, const SystemParams& params, const DerivedParams& d) {
  using namespace constants;
  const double k = params.cavity_decay;
  const double wm = params.mech_freq;
  const double eps2 = 2.0 * k * power / (hbar * d.omega_c);
  return std::sqrt(2.0) * d.g0 * std::sqrt(eps2 / (k * k + wm * wm));
}

double critical_power(const SystemParams& params, const DerivedParams& d) {
  if (!(d.g0 > 0.0)) {
    throw InvalidParameter("g0", "critical power undefined without optomechanical coupling");
  }
  const double k = params.cavity_decay;
  const double wm = params.mech_freq;
  return constants::hbar * d.omega_c * (k * k + wm * wm) * k / (8.0 * d.g0 * d.g0);
}

const char* to_string(Regime r) {
  return r == Regime::oit_weak ? "OIT_weak" : "NMS_strong";
}

Regime classify_regime(double power, double critical) {
  return power < critical ? Regime::oit_weak : Regime::nms_strong;
}

}  // namespace optosq
