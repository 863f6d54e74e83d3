#pragma once

// Run configuration: a flat `section.key = value` document with `#` comments.
// Values are kept in the units of their keys (Hz, W, K, ratios) so that
// parse and serialize round-trip exactly; conversion to rad/s happens in
// to_system_params / to_source.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optosq/conventions.hpp"
#include "optosq/core_model.hpp"
#include "optosq/moments.hpp"
#include "optosq/noise.hpp"
#include "optosq/spectra.hpp"

namespace optosq {

enum class Command { spectrum, variance, sweep, stability, critical_power };
enum class OutputFormat { csv, json };
enum class CarrierMode { omega_m, custom };

const char* to_string(Command c);
const char* to_string(OutputFormat f);

struct SystemConfig {
  double length_m = 0.0;
  double mass_kg = 0.0;
  double mech_freq_hz = 0.0;
  double mech_damping_hz = 0.0;
  double cavity_decay_hz = 0.0;
  double laser_wavelength_m = 0.0;
  double power_w = 0.0;
  DetuningMode detuning_mode = DetuningMode::effective;
  double detuning_over_omega_m = 0.0;
  double temperature_k = 0.0;
  BranchSelector bistable_branch = BranchSelector::lowest;
  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

struct SourceConfig {
  SqueezeKind kind = SqueezeKind::vacuum;
  double kappa_p_over_kappa = 0.0;
  double epsilon_over_kappa_p = 0.0;
  double phi0_over_pi = 0.0;
  double alpha_over_kappa_p = 0.0;
  CarrierMode carrier_offset_mode = CarrierMode::omega_m;
  double carrier_offset_over_omega_m = 1.0;  // used when the mode is custom
  double broadband_n = 0.0;
  double broadband_m = 0.0;
  friend bool operator==(const SourceConfig&, const SourceConfig&) = default;
};

struct GridConfig {
  double omega_over_omega_m_min = 0.0;
  double omega_over_omega_m_max = 0.0;
  std::size_t points = 0;
  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct MomentsConfig {
  double omega_max_over_omega_m = 0.0;
  double rel_tol = 0.0;
  friend bool operator==(const MomentsConfig&, const MomentsConfig&) = default;
};

struct ModelConfig {
  double input_coupling = kPlainInputCoupling;
  double sp_photon_weight = kConsistentSpPhotonWeight;
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Quantities a sweep may vary, named after the config key they override.
enum class SweepAxis {
  power_w,
  temperature_k,
  detuning_over_omega_m,
  kappa_p_over_kappa,
  epsilon_over_kappa_p,
  phi0_over_pi,
  alpha_over_kappa_p,
};

const char* to_string(SweepAxis a);

struct SweepAxisSpec {
  SweepAxis axis = SweepAxis::phi0_over_pi;
  double min = 0.0;  // in the unit of the overridden key
  double max = 0.0;
  std::size_t steps = 21;  // number of points, endpoints included

  std::vector<double> values() const;
  friend bool operator==(const SweepAxisSpec&, const SweepAxisSpec&) = default;
};

struct OutputConfig {
  std::string path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct RunConfig {
  Command command = Command::spectrum;
  SystemConfig system;
  SourceConfig source;
  GridConfig grid;
  MomentsConfig moments;
  ModelConfig model;
  std::optional<SweepAxisSpec> axis1;
  std::optional<SweepAxisSpec> axis2;
  OutputConfig output;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a document on top of the paper-default preset and validates it.
RunConfig parse_config(std::string_view text);
/// Parses a document on top of `base` and validates the result.
RunConfig parse_config(std::string_view text, RunConfig base);

/// Applies every assignment of a document to `cfg` without validating the
/// result, so several layers can be combined before one validate().
void apply_document(RunConfig& cfg, std::string_view text);

/// Applies one `section.key` assignment without validating the whole config.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Canonical form: every key, fixed order, shortest round-trip numbers.
std::string serialize(const RunConfig& cfg);

/// Throws ConfigError naming the offending key.
void validate(const RunConfig& cfg);

SystemParams to_system_params(const RunConfig& cfg);
SqueezeSource to_source(const RunConfig& cfg);
GridSpec to_grid(const RunConfig& cfg);
CutoffSpec to_cutoff(const RunConfig& cfg);
Conventions to_conventions(const RunConfig& cfg);

/// Copy of `cfg` with the key behind `axis` set to `value`.
RunConfig with_axis_value(RunConfig cfg, SweepAxis axis, double value);

/// Shortest round-trip decimal, locale independent.
std::string format_number(double v);

}  // namespace optosq
