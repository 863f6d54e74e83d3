#include "optosq/presets.hpp"

#include <string>

#include "optosq/errors.hpp"

namespace optosq {

namespace {

RunConfig reference_preset() {
  RunConfig c;
  c.command = Command::spectrum;

  auto& s = c.system;
  s.length_m = 25e-3;
  s.mass_kg = 145e-12;
  s.mech_freq_hz = 947e3;
  s.mech_damping_hz = 141.0;
  s.cavity_decay_hz = 215e3;
  s.laser_wavelength_m = 1064e-9;
  s.power_w = 5e-3;
  s.detuning_mode = DetuningMode::effective;
  s.detuning_over_omega_m = 1.0;
  s.temperature_k = 0.1;
  s.bistable_branch = BranchSelector::lowest;

  c.source = SourceConfig{};
  c.grid = {0.8, 1.2, 4001};
  c.moments = {20.0, 1e-6};
  c.model = ModelConfig{};
  c.output = OutputConfig{};
  return c;
}

void set_squeezing(RunConfig& c, SqueezeKind kind, double kappa_p, double eps, double phi0, double alpha) {
  c.source.kind = kind;
  c.source.kappa_p_over_kappa = kappa_p;
  c.source.epsilon_over_kappa_p = eps;
  c.source.phi0_over_pi = phi0;
  c.source.alpha_over_kappa_p = alpha;
}

struct Entry {
  std::string_view name;
  RunConfig (*make)();
};

constexpr Entry kPresets[] = {
    {"paper-default", [] { return reference_preset(); }},
    {"fig2",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::dpo, 0.1, 0.4, 0.0, 2.0);
       return c;
     }},
    {"fig3a",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::dpo, 0.1, 0.1, 1.0, 0.0);
       return c;
     }},
    {"fig3d",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::dpo, 0.1, 0.4, 1.0, 0.0);
       return c;
     }},
    {"fig5a",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::ndpo, 0.1, 0.1, 1.0, 5.0);
       return c;
     }},
    {"fig5b",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::ndpo, 0.1, 0.1, 1.0, 5.0);
       c.system.temperature_k = 1e-3;
       return c;
     }},
    {"fig5c",
     [] {
       auto c = reference_preset();
       set_squeezing(c, SqueezeKind::ndpo, 0.1, 0.1, 1.0, 0.5);
       return c;
     }},
    {"fig8a",
     [] {
       auto c = reference_preset();
       c.command = Command::sweep;
       set_squeezing(c, SqueezeKind::dpo, 1.0, 0.3, 1.0, 0.5);
       c.system.temperature_k = 1e-3;
       c.system.detuning_mode = DetuningMode::bare;
       c.axis1 = SweepAxisSpec{SweepAxis::detuning_over_omega_m, 0.6, 1.4, 41};
       return c;
     }},
    {"fig9a",
     [] {
       auto c = reference_preset();
       c.command = Command::sweep;
       set_squeezing(c, SqueezeKind::dpo, 1.0, 0.3, 0.0, 0.5);
       c.system.temperature_k = 1e-3;
       c.axis1 = SweepAxisSpec{SweepAxis::phi0_over_pi, 0.0, 1.0, 51};
       return c;
     }},
};

}  // namespace

RunConfig preset(std::string_view name) {
  for (const auto& e : kPresets) {
    if (e.name == name) return e.make();
  }
  std::string known;
  for (const auto& e : kPresets) known += (known.empty() ? "" : ", ") + std::string(e.name);
  throw ConfigError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kPresets) out.push_back(e.name);
  return out;
}

std::uint64_t preset_table_hash() {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& e : kPresets) {
    const auto text = std::string(e.name) + "\n" + serialize(e.make());
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace optosq
