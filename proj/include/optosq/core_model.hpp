#pragma once

// Physical parameters, classical steady state and linear stability of a
// single-mode optomechanical cavity with one movable mirror.
//
// All rates and frequencies are angular (rad/s). The mechanical quadratures
// q, p are dimensionless with [q, p] = i.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace optosq {

enum class DetuningMode { bare, effective };

/// Cavity-laser detuning, given either as the bare Δ₀ = ω₀ − ω_c or as the
/// effective Δ = Δ₀ − g₀ q_s that already includes the radiation-pressure shift.
struct DetuningSpec {
  DetuningMode mode = DetuningMode::effective;
  double value = 0.0;  // rad/s

  static DetuningSpec bare(double delta0) { return {DetuningMode::bare, delta0}; }
  static DetuningSpec effective(double delta) { return {DetuningMode::effective, delta}; }

  friend bool operator==(const DetuningSpec&, const DetuningSpec&) = default;
};

struct SystemParams {
  double cavity_length = 0.0;     // m
  double mirror_mass = 0.0;       // kg
  double mech_freq = 0.0;         // ω_m, rad/s
  double mech_damping = 0.0;      // γ_m, rad/s
  double cavity_decay = 0.0;      // κ, rad/s
  double laser_wavelength = 0.0;  // m
  double laser_power = 0.0;       // W
  DetuningSpec detuning{};
  double temperature = 0.0;  // K

  /// Throws InvalidParameter naming the first field that violates its range.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct DerivedParams {
  double g0 = 0.0;         // single-photon coupling, rad/s
  double eps_c = 0.0;      // drive amplitude ε_c, s⁻¹
  double omega_c = 0.0;    // laser angular frequency, rad/s
  double quality = 0.0;    // ω_m/γ_m, +inf when γ_m = 0
};

DerivedParams derive(const SystemParams& params);

/// Which of up to three steady-state solutions is used when the bare-detuning
/// cubic is bistable.
enum class BranchSelector { lowest, middle, highest };

struct SteadyStateRoot {
  double photon_number = 0.0;  // |a_s|²
  double delta_eff = 0.0;      // Δ for this root
  bool stable = false;
};

struct BranchInfo {
  std::vector<SteadyStateRoot> roots;  // ascending photon number
  std::size_t selected = 0;
  bool bistable = false;  // more than one admissible root
};

struct SteadyState {
  std::complex<double> a_s{};  // (κ − iΔ) ε_c / (Δ² + κ²)
  double photon_number = 0.0;  // |a_s|²
  double q_s = 0.0;
  double p_s = 0.0;
  double delta_eff = 0.0;  // Δ
  double delta_bare = 0.0; // Δ₀ = Δ + g₀ q_s
  double g = 0.0;          // √2 g₀ |a_s|, with a_s rotated onto the positive real axis
  BranchInfo branch;
};

SteadyState solve_steady_state(const SystemParams& params, const DerivedParams& derived,
                               BranchSelector selector = BranchSelector::lowest);

/// Convenience overload that derives the constants first.
SteadyState solve_steady_state(const SystemParams& params,
                               BranchSelector selector = BranchSelector::lowest);

/// Residuals of the classical equations of motion evaluated at `ss`, each
/// normalised by the magnitude of its largest term.
struct SteadyStateResidual {
  double momentum = 0.0;
  double field = 0.0;
};
SteadyStateResidual steady_state_residual(const SteadyState& ss, const SystemParams& params,
                                          const DerivedParams& derived);

/// Linearised drift matrix over (δq, δp, δx, δy).
using DriftMatrix = Eigen::Matrix4d;

DriftMatrix drift_matrix(const SteadyState& ss, const SystemParams& params);
DriftMatrix drift_matrix(double g, double delta, const SystemParams& params);

struct StabilityReport {
  bool stable = false;
  std::array<double, 4> eigen_real_parts{};   // ascending
  std::array<double, 4> eigen_imag_parts{};   // paired with eigen_real_parts
  bool routh_hurwitz_stable = false;
};

/// Coefficients c₁..c₄ of det(sI − M) = s⁴ + c₁s³ + c₂s² + c₃s + c₄.
std::array<double, 4> characteristic_polynomial(const DriftMatrix& dm);

/// Strict Routh-Hurwitz test on a monic quartic with coefficients c₁..c₄.
bool routh_hurwitz_stable(const std::array<double, 4>& c);

StabilityReport check_stability(const DriftMatrix& dm);

/// Pump power at which the linearised coupling at Δ = ω_m reaches κ/√2.
double critical_power(const SystemParams& params, const DerivedParams& derived);

/// Linearised coupling g at power `power` with Δ = ω_m.
double coupling_at_power(double power, const SystemParams& params, const DerivedParams& derived);

enum class Regime { oit_weak, nms_strong };

const char* to_string(Regime r);

/// P < P_c is weak coupling; P ≥ P_c (including equality) is strong coupling.
Regime classify_regime(double power, double critical);

}  // namespace optosq
